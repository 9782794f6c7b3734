// Which source texts are reconstructing in a given context.

use symba::repl::Session;
use symba::syntax::check_reconstructing;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mut session = Session::new();
    session.run(r#"[x, y] = PolyRing(QQ(),"x,y",PolyRing.lex).gens()"#)?;
    for src in ["1+x", "x+1", "frac(1,2)*y", "frac(2,4)*y", "x + 1", "\"text\"", "[1, x]", "[1,x]"] {
        let verdict = check_reconstructing(src, session.context());
        match verdict.diagnostic {
            None => println!("{src:<14} yes"),
            Some(why) => println!("{src:<14} no: {why}"),
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
