use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Monomial orders. `Lex` ranks the first declared variable as most
/// significant; `Grad` compares total degree first and breaks ties by `Lex`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TermOrder {
    Lex,
    Grad,
}

impl TermOrder {
    pub fn name(self) -> &'static str {
        match self {
            TermOrder::Lex => "lex",
            TermOrder::Grad => "grad",
        }
    }

    pub fn from_name(name: &str) -> Option<TermOrder> {
        match name {
            "lex" => Some(TermOrder::Lex),
            "grad" => Some(TermOrder::Grad),
            _ => None,
        }
    }

    /// Total comparison of equal-length exponent vectors.
    pub(crate) fn compare(self, a: &ExpVec, b: &ExpVec) -> Ordering {
        match self {
            TermOrder::Lex => a.0.cmp(&b.0),
            TermOrder::Grad => a
                .total_degree()
                .cmp(&b.total_degree())
                .then_with(|| a.0.cmp(&b.0)),
        }
    }
}

impl fmt::Display for TermOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyRing.{}", self.name())
    }
}

/// Exponents of a monomial, one entry per ring variable in declaration order.
///
/// The derived `Ord` is the lexicographic order; map iteration over
/// `ExpVec` keys is therefore ascending `Lex`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExpVec(Vec<BigUint>);

impl ExpVec {
    pub fn new(exponents: Vec<BigUint>) -> Self {
        ExpVec(exponents)
    }

    pub fn zero(len: usize) -> Self {
        ExpVec(vec![BigUint::zero(); len])
    }

    /// The exponent vector of the `i`-th variable.
    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = vec![BigUint::zero(); len];
        v[i] = BigUint::from(1u32);
        ExpVec(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponents(&self) -> &[BigUint] {
        &self.0
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn total_degree(&self) -> BigUint {
        self.0.iter().sum()
    }

    pub(crate) fn add(&self, other: &ExpVec) -> ExpVec {
        ExpVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl From<Vec<u64>> for ExpVec {
    fn from(v: Vec<u64>) -> Self {
        ExpVec(v.into_iter().map(BigUint::from).collect())
    }
}

pub fn term_cmp(order: TermOrder, a: &ExpVec, b: &ExpVec) -> Result<Ordering> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch(a.len(), b.len()));
    }
    Ok(order.compare(a, b))
}
