// Building ZZ[x][y][z] one level at a time and multiplying in it.

use symba::polynomial::generators;
use symba::syntax::print_pretty;
use symba::{RingFactory, TermOrder, Value};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let zx = RingFactory::poly_from_list(RingFactory::Integers, "x", TermOrder::Lex)?;
    let zxy = RingFactory::poly_from_list(zx.clone(), "y", TermOrder::Lex)?;
    let zxyz = RingFactory::poly_from_list(zxy.clone(), "z", TermOrder::Lex)?;
    let x = generators(&zx)?.remove(0);
    let y = generators(&zxy)?.remove(0);
    let z = generators(&zxyz)?.remove(0);

    println!("{}", zxy.add(&x, &zxy.mul(&x, &y)?)?);
    let one_minus_z = zxyz.sub(&Value::int(1), &z)?;
    println!("{}", zxyz.pow(&one_minus_z, &2.into())?);
    println!("{}", print_pretty(&zxyz));
    println!("{}", Value::Factory(zxyz));

    // the same monomials under the graded order
    let grad = RingFactory::poly_from_list(RingFactory::Integers, "x,y", TermOrder::Grad)?;
    let lex = RingFactory::poly_from_list(RingFactory::Integers, "x,y", TermOrder::Lex)?;
    for f in [lex, grad] {
        let g = generators(&f)?;
        let p = f.add(&f.mul(&g[1], &g[1])?, &g[0])?;
        println!("{:<4} y**2 + x -> {p}", f.as_poly().unwrap().order().name());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
