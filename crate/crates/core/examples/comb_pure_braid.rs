// Comb a braid whose first strand is the only tangled one into a free word.
//
// `cargo run --example comb_pure_braid`

use std::error::Error;

use halftwist::{comb, equal, in_a_n, BraidWord, FreeWord};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let b = BraidWord::parse(4, "1 -2 -3 -3 2 2 3 3 -2 1")?;
    println!("braid:       {b}");
    println!("combed:      {}", in_a_n(&b));
    let f = comb(&b)?;
    println!("free word:   {f}");
    println!("embeds back: {}", equal(&f.embed(), &b)?);

    let u = FreeWord::parse(4, "a1 a4^-2 a2 a3")?;
    let e = u.embed();
    println!("{u} embeds as [{e}] and combs to {}", comb(&e)?);

    let tangled = BraidWord::parse(4, "2 2")?;
    println!("[{tangled}] in the free subgroup: {}", in_a_n(&tangled));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
