// Cyclic reduction in the free group and conjugators to a generator power.
//
// `cargo run --example free_group_conjugacy`

use std::error::Error;

use halftwist::FreeWord;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let x = FreeWord::parse(3, "a2 a1^-1 a3^2 a1 a2^-1")?;
    let (core, u) = x.cyclic_reduce();
    println!("{x} = ({u}) {core} ({u})^-1");

    match x.conjugate_to_generator_power(3, 2) {
        Some(q) => {
            let back = q.inverse().mul(&FreeWord::generator_power(3, 3, 2)).mul(&q);
            println!("Q = {q}, Q^-1 a3^2 Q = {back}");
        }
        None => println!("not conjugate to a3^2"),
    }
    println!("conjugate to a3^3: {}", x.conjugate_to_generator_power(3, 3).is_some());
    println!("conjugate to a1^2: {}", x.conjugate_to_generator_power(1, 2).is_some());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
