// Permutations and crossing indices, the cheap filters ahead of combing.
//
// `cargo run --example crossing_indices`

use std::error::Error;

use halftwist::BraidWord;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for text in ["1 1 1", "1 -2 1 1 2", "1 1 3 3", "2 2 2 -1"] {
        let b = BraidWord::parse(4, text)?;
        let perm = b.permutation();
        let cr = b.crossing_matrix();
        println!("[{b}]  permutation {perm}  exponent sum {}", b.exponent_sum());
        println!("{cr}");
        println!("  entries sum to {}", cr.off_diagonal_sum());
        let k = b.exponent_sum();
        match perm.as_transposition() {
            Some(pair) => println!("  transposition {pair:?}, odd k passes"),
            None if perm.is_identity() => {
                let half = k / 2;
                println!("  pure; isolated pair for k/2 = {half}: {:?}", cr.isolated_pair(half))
            }
            None => println!("  neither transposition nor identity: rejected"),
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
