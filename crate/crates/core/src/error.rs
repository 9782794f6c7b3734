use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Every failure the engine can report, from coefficient arithmetic up to
/// the interpreter.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("modulus must be at least 2, got {0}")]
    BadModulus(BigInt),
    #[error("moduli differ: {0} and {1}")]
    ModulusMismatch(BigInt, BigInt),
    #[error("{0} is not ordered")]
    NotOrdered(String),
    #[error("exponent vectors differ in length: {0} and {1}")]
    LengthMismatch(usize, usize),
    #[error("{0} is not a polynomial ring")]
    NotAPolynomialRing(String),
    #[error("{value} is not an element of {ring}")]
    WrongCoefficientRing { value: String, ring: String },
    #[error("operands belong to different rings: {0} and {1}")]
    FactoryMismatch(String, String),
    #[error("negative exponent {0}")]
    NegativeExponent(BigInt),
    #[error("{value} does not lie in the tower of {ring}")]
    NotInTower { value: String, ring: String },
    #[error("incompatible rings: {0} and {1}")]
    IncompatibleRings(String, String),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("syntax error at column {column}: expected {}, found {found}", expected.join(" or "))]
    Syntax {
        column: usize,
        expected: Vec<String>,
        found: String,
    },
    #[error("name '{0}' is not defined")]
    Name(String),
    #[error("{0}")]
    Arity(String),
    #[error("{0}")]
    Type(String),
    #[error("index {index} out of range for list of length {len}")]
    Index { index: BigInt, len: usize },
    #[error("at column {column}: {source}")]
    Located { column: usize, source: Box<Error> },
}

impl Error {
    /// Attaches a source column unless the error already carries one.
    pub fn at(self, column: usize) -> Error {
        match self {
            Error::Located { .. } | Error::Syntax { .. } => self,
            other => Error::Located {
                column,
                source: Box::new(other),
            },
        }
    }

    /// The error with any position wrapper removed.
    pub fn kind(&self) -> &Error {
        match self {
            Error::Located { source, .. } => source.kind(),
            other => other,
        }
    }
}
