// Equality of braids through the left normal form.
//
// `cargo run --example word_problem`

use std::error::Error;

use halftwist::word_problem::{equal_verdict, normal_form};
use halftwist::{equal, is_trivial, positive_equal, BraidWord};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let a = BraidWord::parse(3, "1 2 1 1 2 1")?;
    let b = BraidWord::parse(3, "1 2 1 2 1 2")?;
    println!("Δ² two ways: equal = {}", equal(&a, &b)?);
    println!("positive search agrees: {}", positive_equal(&a, &b)?);

    let nf = normal_form(&a);
    println!("normal form: Δ^{} with {} factors", nf.delta_power, nf.factors.len());

    // Δ² is central.
    let x = BraidWord::parse(3, "2 -1 2 2")?;
    let ax = a.concat(&x)?;
    let xa = x.concat(&a)?;
    println!("Δ²x = xΔ²: {}", equal(&ax, &xa)?);

    let v = equal_verdict(&BraidWord::parse(4, "1 3")?, &BraidWord::parse(4, "3 1")?)?;
    println!("σ1σ3 vs σ3σ1: {} (both Δ^{})", v.equal, v.left.delta_power);

    let junk = BraidWord::parse(4, "1 2 -1 -2 -1 2 1 -2")?;
    println!("[{junk}] trivial: {}", is_trivial(&junk));
    let commutator = BraidWord::parse(4, "1 3 -1 -3")?;
    println!("[{commutator}] trivial: {}", is_trivial(&commutator));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
