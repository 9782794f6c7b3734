//! The expression language: syntax tree, parser, canonical printer and the
//! reconstruction check that ties them together.

pub mod ast;
pub mod parser;
pub mod printer;
mod reconstruct;

pub use parser::{parse, parse_expr};
pub use printer::{print_pretty, print_value};
pub use reconstruct::{check_reconstructing, is_reconstructing, Verdict};
