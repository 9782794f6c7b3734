// Rings are values: they print as the call that rebuilds them.

use symba::repl::Session;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mut session = Session::new();
    for line in [
        r#"r = PolyRing(ZZ(),"B,S",PolyRing.lex)"#,
        "r",
        r#"pr = PolyRing(r,"T,Z",PolyRing.lex)"#,
        "pr",
        ":pretty pr",
        "pr.ring() == r",
        "[T, Z] = pr.gens()",
        "T.factory().depth()",
        "[r, pr, QQ(), Zn(11)]",
    ] {
        for out in session.run(line)? {
            println!("{line:<40} -> {out}");
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
