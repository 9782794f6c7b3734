use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    let stdin = io::stdin();
    let code = symba::repl::run_cli(std::env::args().skip(1), stdin.lock(), io::stdout(), io::stderr());
    ExitCode::from(code as u8)
}
