// Conjugate a braid so the two strands its half-twist swaps sit at 1 and n.
//
// `cargo run --example move_switching_strands`

use std::error::Error;

use halftwist::{delta, delta_conjugator, equal, move_switching_strands, BraidWord, SwitchingPair};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let n = 5;
    let b = BraidWord::parse(n, "2 3 3 3 -2")?;
    let (i, j) = b.permutation().as_transposition().ok_or("not a transposition")?;
    println!("[{b}] swaps strands {i} and {j}");
    let pair = SwitchingPair::new(i, j, n).ok_or("bad pair")?;
    let (moved, c) = move_switching_strands(&b, pair);
    println!("C = [{c}]; C^-1 b C = [{moved}] swaps {:?}", moved.permutation().as_transposition());

    let d = delta_conjugator(n);
    let s1 = BraidWord::generator(n, 1, true);
    println!("δ = [{}]", delta(n));
    println!("D = [{d}], D^-1 σ1 D = δ: {}", equal(&s1.conjugate(&d)?, &delta(n))?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
