// Mixed-level arithmetic: operands are lifted into the deeper ring.

use symba::coercion::{coerce, lift};
use symba::evaluator::dispatch;
use symba::polynomial::{generators, value_of, PolyOp};
use symba::{RingFactory, TermOrder, Value};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let zx = RingFactory::poly_from_list(RingFactory::Integers, "x", TermOrder::Lex)?;
    let zxy = RingFactory::poly_from_list(zx.clone(), "y", TermOrder::Lex)?;
    let x = generators(&zx)?.remove(0);
    let y = generators(&zxy)?.remove(0);

    let pair = coerce(&x, &y)?;
    println!("x and y meet in {}", Value::Factory(pair.common));

    // automatic dispatch agrees with spelling out the embedding by hand
    let auto = dispatch(PolyOp::Add, &Value::int(1), &y)?;
    let manual = zxy.add(&y, &value_of(&zxy, &value_of(&zx, &Value::int(1))?)?)?;
    println!("1+y -> {auto} (manual: {manual})");
    println!("lift(ZZ[x][y], 3) -> {}", lift(&zxy, &Value::int(3))?.value);

    let [t] = <[Value; 1]>::try_from(generators(&RingFactory::poly_from_list(
        RingFactory::Modular(7.into()),
        "t",
        TermOrder::Lex,
    )?)?)
    .unwrap();
    println!("10+t over Z7 -> {}", dispatch(PolyOp::Add, &Value::int(10), &t)?);

    let u = generators(&RingFactory::poly_from_list(RingFactory::Integers, "u", TermOrder::Lex)?)?.remove(0);
    if let Err(e) = dispatch(PolyOp::Mul, &x, &u) {
        println!("x*u: {e}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
