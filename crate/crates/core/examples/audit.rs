// The `--audit` mode, driven in-process.

use symba::repl::run_cli;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::temp_dir().join(format!("symba-audit-example-{}.sym", std::process::id()));
    std::fs::write(&path, "[x] = PolyRing(ZZ(),\"x\",lex).gens()\n1+x\nx+1\n-x**2\n")?;
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run_cli(["--audit", path.to_str().unwrap()], std::io::empty(), &mut out, &mut err);
    print!("{}", String::from_utf8(out)?);
    print!("{}", String::from_utf8(err)?);
    println!("exit code {code}");
    std::fs::remove_file(path)?;
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
