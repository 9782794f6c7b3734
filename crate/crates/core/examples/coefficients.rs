// Integers, reduced fractions and residues, and how they print.

use symba::coefficients::{mod_make, rat_make, RingElement};
use symba::Value;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let half: Value = rat_make(2.into(), 4.into())?.into();
    let two: Value = rat_make(4.into(), 2.into())?.into();
    println!("2/4 -> {half}");
    println!("4/2 -> {two} (a fraction with denominator 1 is an integer)");

    let a = rat_make(1.into(), 2.into())?;
    let b = rat_make(1.into(), 3.into())?;
    println!("1/2 + 1/3 -> {}", Value::from(a.add(&b)?));

    let m = mod_make((-5).into(), 11.into())?;
    println!("-5 mod 11 -> {m}");
    println!("{m} * {m} -> {}", m.mul(&m)?);

    let seven = mod_make(1.into(), 7.into())?;
    if let Err(e) = m.add(&seven) {
        println!("mixing moduli: {e}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
