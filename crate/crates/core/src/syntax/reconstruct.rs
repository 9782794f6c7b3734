use super::{parse_expr, print_value};
use crate::evaluator::{eval, Context};

/// Outcome of a reconstruction check, with what was printed or why
/// evaluation failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub printed: Option<String>,
    pub diagnostic: Option<String>,
}

/// `src` is reconstructing in `ctx` when it parses as an expression,
/// evaluates without error, and the result prints as exactly `src`.
pub fn check_reconstructing(src: &str, ctx: &Context) -> Verdict {
    let failed = |msg: String| Verdict {
        holds: false,
        printed: None,
        diagnostic: Some(msg),
    };
    let expr = match parse_expr(src) {
        Ok(e) => e,
        Err(e) => return failed(e.to_string()),
    };
    let value = match eval(&expr, ctx, &mut Vec::new()) {
        Ok(v) => v,
        Err(e) => return failed(e.to_string()),
    };
    let printed = print_value(&value);
    Verdict {
        holds: printed == src,
        diagnostic: (printed != src).then(|| format!("prints as {printed}")),
        printed: Some(printed),
    }
}

pub fn is_reconstructing(src: &str, ctx: &Context) -> bool {
    check_reconstructing(src, ctx).holds
}
