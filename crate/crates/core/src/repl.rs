//! Sessions, transcripts and the `symba` command line.
//!
//! A session reads one statement per line. Bare expressions echo their
//! canonical form; assignments print nothing. Lines starting with `:` are
//! meta-commands:
//!
//! | command          | effect                                            |
//! |------------------|---------------------------------------------------|
//! | `:check <expr>`  | `true` iff `<expr>` is reconstructing right now   |
//! | `:pretty <expr>` | conventional display of a ring, e.g. `ZZ[x][y]`   |
//! | `:ctx`           | current user bindings                             |
//! | `:quit`          | leave the session                                 |

use std::fs;
use std::io::{BufRead, Write};
use std::path::PathBuf;

use clap::Parser as _;

use crate::error::{Error, Result};
use crate::evaluator::{exec, Context};
use crate::syntax::{check_reconstructing, parse, parse_expr, print_pretty, print_value};
use crate::value::Value;

pub const PROMPT: &str = ">>> ";

pub const EXIT_OK: i32 = 0;
pub const EXIT_EVAL_ERROR: i32 = 1;
pub const EXIT_AUDIT_FAILURE: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Step {
    Output(Vec<String>),
    Quit,
}

/// One interpreter session with its persistent context.
#[derive(Clone, Debug)]
pub struct Session {
    ctx: Context,
}

impl Default for Session {
    fn default() -> Self {
        Session::new()
    }
}

fn is_blank(line: &str) -> bool {
    let t = line.trim();
    t.is_empty() || t.starts_with('#')
}

impl Session {
    pub fn new() -> Session {
        Session { ctx: Context::prelude() }
    }

    pub fn with_context(ctx: Context) -> Session {
        Session { ctx }
    }

    pub fn context(&self) -> &Context {
        &self.ctx
    }

    /// Executes one line. On error the context is left unchanged.
    pub fn execute(&mut self, line: &str) -> Result<Step> {
        let line = line.trim_end_matches(['\n', '\r']);
        if is_blank(line) {
            return Ok(Step::Output(Vec::new()));
        }
        if let Some(meta) = line.trim_start().strip_prefix(':') {
            return self.meta(meta);
        }
        let stmt = parse(line)?;
        let mut out = Vec::new();
        let (ctx, value) = exec(&stmt, &self.ctx, &mut out)?;
        self.ctx = ctx;
        match value {
            Some(Value::Unit) | None => {}
            Some(v) => out.push(print_value(&v)),
        }
        Ok(Step::Output(out))
    }

    /// Like [`execute`](Self::execute), treating `:quit` as a line with no
    /// output.
    pub fn run(&mut self, line: &str) -> Result<Vec<String>> {
        match self.execute(line)? {
            Step::Output(lines) => Ok(lines),
            Step::Quit => Ok(Vec::new()),
        }
    }

    fn meta(&mut self, meta: &str) -> Result<Step> {
        let (cmd, arg) = match meta.split_once(' ') {
            Some((cmd, arg)) => (cmd, Some(arg)),
            None => (meta, None),
        };
        let arg = |usage: &str| arg.ok_or_else(|| Error::Arity(format!("usage: :{cmd} {usage}")));
        let out = match cmd {
            "quit" => return Ok(Step::Quit),
            "ctx" => self
                .ctx
                .user_bindings()
                .into_iter()
                .map(|(name, v)| format!("{name} = {}", print_value(v)))
                .collect(),
            "check" => {
                let verdict = check_reconstructing(arg("<expr>")?, &self.ctx);
                vec![verdict.holds.to_string()]
            }
            "pretty" => {
                let e = parse_expr(arg("<expr>")?)?;
                match crate::evaluator::eval(&e, &self.ctx, &mut Vec::new())? {
                    Value::Factory(f) => vec![print_pretty(&f)],
                    other => return Err(Error::Type(format!(":pretty expects a ring, got a {}", other.kind_name()))),
                }
            }
            other => return Err(Error::Type(format!("unknown command :{other}"))),
        };
        Ok(Step::Output(out))
    }
}

/// One line of a recorded session.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entry {
    pub input: String,
    pub output: Vec<String>,
    pub error: Option<String>,
}

/// Inputs together with what a fresh session printed for them.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Transcript {
    pub entries: Vec<Entry>,
}

impl Transcript {
    /// Runs `inputs` through a fresh session, stopping after `:quit`.
    pub fn record<S: AsRef<str>>(inputs: impl IntoIterator<Item = S>) -> Transcript {
        let mut session = Session::new();
        let mut entries = Vec::new();
        for input in inputs {
            let input = input.as_ref().to_string();
            let (output, error, quit) = match session.execute(&input) {
                Ok(Step::Output(lines)) => (lines, None, false),
                Ok(Step::Quit) => (Vec::new(), None, true),
                Err(e) => (Vec::new(), Some(e.to_string()), false),
            };
            entries.push(Entry { input, output, error });
            if quit {
                break;
            }
        }
        Transcript { entries }
    }

    pub fn inputs(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|e| e.input.as_str())
    }

    /// Everything written to standard output, one line per element.
    pub fn output_lines(&self) -> Vec<&str> {
        self.entries.iter().flat_map(|e| e.output.iter().map(String::as_str)).collect()
    }

    /// Whether a fresh session reproduces this transcript exactly.
    pub fn replays(&self) -> bool {
        Transcript::record(self.inputs()) == *self
    }

    /// The session's outputs fed back as inputs. Statement lines that
    /// printed are replaced by what they printed; assignments, silent
    /// lines, meta-commands and failing lines are kept verbatim, since
    /// they establish the context the outputs are judged in.
    pub fn feedback_inputs(&self) -> Vec<String> {
        let mut inputs = Vec::new();
        for e in &self.entries {
            let meta = e.input.trim_start().starts_with(':');
            if meta || e.output.is_empty() || e.error.is_some() {
                inputs.push(e.input.clone());
            } else {
                inputs.extend(e.output.iter().cloned());
            }
        }
        inputs
    }
}

/// Interactive loop. Errors go to `err`; the session survives them.
pub fn run_interactive(mut input: impl BufRead, mut out: impl Write, mut err: impl Write, prompt: bool) -> i32 {
    let mut session = Session::new();
    let mut buf = Vec::new();
    loop {
        if prompt {
            let _ = write!(out, "{PROMPT}");
            let _ = out.flush();
        }
        buf.clear();
        match input.read_until(b'\n', &mut buf) {
            Ok(0) => {
                if prompt {
                    let _ = writeln!(out);
                }
                return EXIT_OK;
            }
            Ok(_) => {}
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                return EXIT_EVAL_ERROR;
            }
        }
        let line = String::from_utf8_lossy(&buf);
        match session.execute(&line) {
            Ok(Step::Output(lines)) => {
                for l in lines {
                    let _ = writeln!(out, "{l}");
                }
            }
            Ok(Step::Quit) => return EXIT_OK,
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
            }
        }
        let _ = out.flush();
    }
}

/// Prompts are on unless `SYMBA_NOPROMPT=1`.
pub fn prompt_enabled() -> bool {
    std::env::var("SYMBA_NOPROMPT").map_or(true, |v| v != "1")
}

#[derive(clap::Parser, Debug)]
#[command(name = "symba", about = "Computer algebra whose output is valid input")]
struct Cli {
    /// Evaluate one statement and print the result
    #[arg(short = 'e', value_name = "STMT", conflicts_with_all = ["audit", "script"])]
    expr: Option<String>,
    /// Check that every bare expression in FILE is reconstructing
    #[arg(long, value_name = "FILE", conflicts_with = "script")]
    audit: Option<PathBuf>,
    /// Script to execute line by line
    script: Option<PathBuf>,
}

fn run_script(src: &str, mut out: impl Write, mut err: impl Write) -> i32 {
    let mut session = Session::new();
    for (i, line) in src.lines().enumerate() {
        match session.execute(line) {
            Ok(Step::Output(lines)) => {
                for l in lines {
                    let _ = writeln!(out, "{l}");
                }
            }
            Ok(Step::Quit) => break,
            Err(e) => {
                let _ = writeln!(err, "error: line {}: {e}", i + 1);
                return EXIT_EVAL_ERROR;
            }
        }
    }
    EXIT_OK
}

fn run_audit(src: &str, mut out: impl Write, mut err: impl Write) -> i32 {
    let mut session = Session::new();
    let (mut checked, mut failures) = (0usize, 0usize);
    for (i, line) in src.lines().enumerate() {
        if is_blank(line) || line.trim_start().starts_with(':') {
            continue;
        }
        match parse(line) {
            Ok(crate::syntax::ast::Statement::Expr(_)) | Err(_) => {
                checked += 1;
                let verdict = check_reconstructing(line, session.context());
                if !verdict.holds {
                    failures += 1;
                    let why = verdict.diagnostic.unwrap_or_default();
                    let _ = writeln!(out, "line {}: {line}: {why}", i + 1);
                }
            }
            Ok(_) => {
                if let Err(e) = session.execute(line) {
                    let _ = writeln!(err, "error: line {}: {e}", i + 1);
                    return EXIT_EVAL_ERROR;
                }
            }
        }
    }
    let _ = writeln!(err, "audit: {checked} expression(s), {failures} failure(s)");
    if failures > 0 {
        EXIT_AUDIT_FAILURE
    } else {
        EXIT_OK
    }
}

/// Entry point behind the `symba` binary. `args` excludes the program name.
pub fn run_cli<S: Into<String>>(
    args: impl IntoIterator<Item = S>,
    input: impl BufRead,
    mut out: impl Write,
    mut err: impl Write,
) -> i32 {
    let args: Vec<String> = args.into_iter().map(Into::into).collect();
    if args.is_empty() {
        return run_interactive(input, out, err, prompt_enabled());
    }
    let cli = match Cli::try_parse_from(std::iter::once("symba".to_string()).chain(args)) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion) => {
            let _ = write!(out, "{e}");
            return EXIT_OK;
        }
        Err(e) => {
            let _ = write!(err, "{e}");
            return EXIT_USAGE;
        }
    };
    let read = |path: &PathBuf, err: &mut dyn Write| match fs::read_to_string(path) {
        Ok(src) => Ok(src),
        Err(e) => {
            let _ = writeln!(err, "error: {}: {e}", path.display());
            Err(EXIT_EVAL_ERROR)
        }
    };
    if let Some(stmt) = cli.expr {
        let mut session = Session::new();
        return match session.execute(&stmt) {
            Ok(Step::Output(lines)) => {
                for l in lines {
                    let _ = writeln!(out, "{l}");
                }
                EXIT_OK
            }
            Ok(Step::Quit) => EXIT_OK,
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                EXIT_EVAL_ERROR
            }
        };
    }
    if let Some(path) = cli.audit {
        return match read(&path, &mut err) {
            Ok(src) => run_audit(&src, out, err),
            Err(code) => code,
        };
    }
    if let Some(path) = cli.script {
        return match read(&path, &mut err) {
            Ok(src) => run_script(&src, out, err),
            Err(code) => code,
        };
    }
    run_interactive(input, out, err, prompt_enabled())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cli(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run_cli(args.iter().copied(), std::io::empty(), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn one_shot_expression() {
        // 1*3 + 1*2 = 5 over 2*3
        assert_eq!(cli(&["-e", "frac(1,2)+frac(1,3)"]), (0, "frac(5,6)\n".into(), String::new()));
        let (code, out, err) = cli(&["-e", "mod(1,7)+mod(1,11)"]);
        assert_eq!((code, out.as_str()), (1, ""));
        assert!(err.contains("moduli differ"), "{err}");
    }

    #[test]
    fn usage_errors() {
        assert_eq!(cli(&["--bogus"]).0, EXIT_USAGE);
        assert_eq!(cli(&["-e"]).0, EXIT_USAGE);
        assert_eq!(cli(&["-e", "1", "script.sym"]).0, EXIT_USAGE);
        assert_eq!(cli(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn meta_commands() {
        let mut s = Session::new();
        s.run(r#"r = PolyRing(ZZ(),"x",lex)"#).unwrap();
        s.run("[x] = r.gens()").unwrap();
        assert_eq!(s.run(":check 1+x").unwrap(), ["true"]);
        assert_eq!(s.run(":check x + 1").unwrap(), ["false"]);
        assert_eq!(s.run(":check \"hello\"").unwrap(), ["false"]);
        assert_eq!(s.run(":pretty r").unwrap(), ["ZZ[x]"]);
        assert_eq!(
            s.run(":ctx").unwrap(),
            ["r = PolyRing(ZZ(),\"x\",PolyRing.lex)", "x = x"]
        );
        assert_eq!(s.execute(":quit").unwrap(), Step::Quit);
        assert!(s.run(":pretty x").is_err());
        assert!(s.run(":nope").is_err());
        assert!(s.run(":check").is_err());
    }

    #[test]
    fn interactive_loop_survives_errors() {
        let input = b"1+\nfrac(1,0)\n1+1\n:quit\n2+2\n";
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run_interactive(&input[..], &mut out, &mut err, true);
        assert_eq!(code, 0);
        assert_eq!(String::from_utf8(out).unwrap(), ">>> >>> >>> 2\n>>> ");
        let err = String::from_utf8(err).unwrap();
        assert_eq!(err.lines().count(), 2);
        assert!(err.contains("zero denominator"));
    }

    #[test]
    fn invalid_utf8_is_tolerated() {
        let input: &[u8] = &[0xff, 0xfe, b'\n', b'1', b'\n'];
        let (mut out, mut err) = (Vec::new(), Vec::new());
        assert_eq!(run_interactive(input, &mut out, &mut err, false), 0);
        assert_eq!(out, b"1\n");
    }
}
