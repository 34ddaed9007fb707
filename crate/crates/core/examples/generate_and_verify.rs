// Seeded half-twist powers with known answers, classified and checked.
//
// `cargo run --example generate_and_verify`

use std::error::Error;

use halftwist::{classify, random_half_twist_power, verify_power, Classification};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let mut solved = 0;
    for seed in 0..12u64 {
        let n = 2 + (seed % 5) as usize;
        let k = [1, -2, 3, 4, -5, 6][(seed % 6) as usize];
        let inst = random_half_twist_power(n, k, 10, seed);
        match classify(&inst.word) {
            Classification::Power { k: got, root, conjugator } => {
                assert_eq!(got, k);
                assert!(verify_power(&inst.word, got, &root, &conjugator));
                solved += 1;
                println!("seed {seed:2} B_{n} k={k:+}: {} letters, root [{root}]", inst.word.len());
            }
            other => return Err(format!("seed {seed}: {other:?}").into()),
        }
    }
    println!("{solved}/12 recovered");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
