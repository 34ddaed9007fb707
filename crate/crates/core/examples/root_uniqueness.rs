// Different conjugators, same half-twist: the returned root only depends on
// the braid.
//
// `cargo run --example root_uniqueness`

use std::error::Error;

use halftwist::{classify, equal, BraidWord, Classification};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let s1 = BraidWord::generator(4, 1, true);
    let p = BraidWord::parse(4, "2 3 -1")?;
    // σ1 commutes with σ3 and with σ1 itself, so σ1σ3P conjugates to the same root.
    let q = BraidWord::parse(4, "1 3")?.concat(&p)?;
    let h1 = s1.conjugate(&p)?;
    let h2 = s1.conjugate(&q)?;
    println!("roots agree as braids: {}", equal(&h1, &h2)?);

    let b = h2.power(5);
    if let Classification::Power { k, root, .. } = classify(&b) {
        println!("k = {k}, recovered root = [{root}]");
        println!("matches the input root: {}", equal(&root, &h1)?);
    }

    let other = BraidWord::generator(4, 2, true);
    println!("σ2^5 is a different braid: {}", !equal(&other.power(5), &b)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
