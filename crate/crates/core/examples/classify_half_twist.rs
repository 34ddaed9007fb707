// Decide whether a braid is a power of a half-twist.
//
// `cargo run --example classify_half_twist`

use std::error::Error;

use halftwist::{classify, verify_power, BraidWord, Classification};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let cases: [(usize, &str); 6] = [
        (3, "-2 1 1 1 2"),
        (4, "1 2 1 3 2 1"),
        (4, "3 3 -1 -1"),
        (2, "-1 -1 -1"),
        (3, "1 -1 2 -2"),
        (5, "-4 -3 2 2 3 4"),
    ];
    for (n, text) in cases {
        let b = BraidWord::parse(n, text)?;
        let verdict = classify(&b);
        match &verdict {
            Classification::Power { k, root, conjugator } => {
                println!("B_{n} [{b}]: power k={k} root=[{root}] P=[{conjugator}]");
                assert!(verify_power(&b, *k, root, conjugator));
            }
            Classification::NotPower { reason } => println!("B_{n} [{b}]: not a power ({reason})"),
            Classification::Identity => println!("B_{n} [{b}]: trivial"),
            Classification::Undecided { limit } => println!("B_{n} [{b}]: undecided at {limit}"),
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
