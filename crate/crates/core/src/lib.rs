//! Symba: a small computer-algebra engine in which every printed value is
//! a reconstructing expression. Parsing a printed value and evaluating it
//! gives back an equal value that prints identically.
//!
//! The layers, bottom up:
//!
//! - [`coefficients`]: integers, rationals `frac(n,d)`, residues `mod(v,m)`.
//! - [`polynomial`]: ring factories and sparse polynomials over any ring of
//!   the tower, including other polynomial rings.
//! - [`coercion`]: lifting values between the levels of a tower.
//! - [`syntax`]: parser, canonical printer, reconstruction check.
//! - [`evaluator`]: contexts, builtins, operator dispatch.
//! - [`repl`]: sessions, transcripts and the command-line front end.
//!
//! ```
//! use symba::repl::Session;
//!
//! let mut s = Session::new();
//! s.run("r = PolyRing(ZZ(),\"x\",PolyRing.lex)").unwrap();
//! s.run("[x] = r.gens()").unwrap();
//! assert_eq!(s.run("(1-x)**2").unwrap(), ["1-2*x+x**2"]);
//! ```

pub mod coefficients;
pub mod coercion;
pub mod error;
pub mod evaluator;
pub mod polynomial;
pub mod repl;
pub mod syntax;
pub mod value;

pub use error::{Error, Result};
pub use evaluator::Context;
pub use polynomial::{Polynomial, RingFactory, TermOrder};
pub use value::Value;
