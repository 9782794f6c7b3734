//! Sparse multivariate polynomials over any ring in the tower, owned by a
//! [`RingFactory`].
//!
//! A polynomial never stores a zero coefficient and is never a bare
//! constant: arithmetic that lands on a constant hands back the coefficient
//! itself, so `(1+x)-x` is the integer `1`.

mod arith;
mod factory;
mod order;

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigUint;

pub use factory::{PolyRing, RingFactory};
pub use order::{term_cmp, ExpVec, TermOrder};

use crate::error::{Error, Result};
use crate::syntax::printer::print_value;
use crate::value::Value;

/// Binary ring operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    ring: Arc<PolyRing>,
    terms: BTreeMap<ExpVec, Value>,
}

impl Polynomial {
    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn factory(&self) -> RingFactory {
        RingFactory::Poly(self.ring.clone())
    }

    /// Terms keyed by exponent vector; map order is ascending lex.
    pub fn terms(&self) -> &BTreeMap<ExpVec, Value> {
        &self.terms
    }

    /// Terms in ascending order under the ring's term order.
    pub fn terms_in_order(&self) -> Vec<(&ExpVec, &Value)> {
        let mut terms: Vec<_> = self.terms.iter().collect();
        if self.ring.order() != TermOrder::Lex {
            let order = self.ring.order();
            terms.sort_by(|a, b| order.compare(a.0, b.0));
        }
        terms
    }

    /// Highest term under the ring's term order.
    pub fn leading_term(&self) -> (&ExpVec, &Value) {
        let order = self.ring.order();
        self.terms
            .iter()
            .max_by(|a, b| order.compare(a.0, b.0))
            .expect("polynomials have at least one term")
    }

    /// Total degree in this ring's own variables.
    pub fn total_degree(&self) -> BigUint {
        self.terms.keys().map(ExpVec::total_degree).max().unwrap_or_default()
    }

    /// Structural checks of every normalization invariant, recursively.
    pub fn validate(&self) -> std::result::Result<(), String> {
        if self.terms.is_empty() {
            return Err("empty polynomial".into());
        }
        if self.terms.len() == 1 && self.terms.keys().next().is_some_and(ExpVec::is_constant) {
            return Err("constant polynomial did not mutate".into());
        }
        for (e, c) in &self.terms {
            if e.len() != self.ring.nvars() {
                return Err(format!("exponent vector of length {} in ring of {} variables", e.len(), self.ring.nvars()));
            }
            if RingFactory::is_zero(c) {
                return Err("stored zero coefficient".into());
            }
            if !self.ring.coefficients().contains(c) {
                return Err(format!("coefficient {} outside the coefficient ring", print_value(c)));
            }
            c.validate()?;
        }
        Ok(())
    }
}

/// One generator per top-level variable, in declaration order.
pub fn generators(f: &RingFactory) -> Result<Vec<Value>> {
    let ring = f.as_poly().ok_or_else(|| Error::NotAPolynomialRing(print_value(&Value::Factory(f.clone()))))?;
    let one = ring.coefficients().one();
    Ok((0..ring.nvars())
        .map(|i| {
            let terms = BTreeMap::from([(ExpVec::unit(ring.nvars(), i), one.clone())]);
            Value::Polynomial(Polynomial {
                ring: ring.clone(),
                terms,
            })
        })
        .collect())
}

/// Embeds a coefficient into the polynomial ring `f`. The result is the
/// canonical element, so a nonzero constant comes back as itself and zero
/// as the coefficient chain's zero.
pub fn value_of(f: &RingFactory, c: &Value) -> Result<Value> {
    let ring = f.as_poly().ok_or_else(|| Error::NotAPolynomialRing(print_value(&Value::Factory(f.clone()))))?;
    if !ring.coefficients().contains(c) {
        return Err(Error::WrongCoefficientRing {
            value: print_value(c),
            ring: print_value(&Value::Factory(ring.coefficients().clone())),
        });
    }
    Ok(arith::normalize(ring, arith::embed(ring, c)))
}

/// Builds a polynomial value from raw terms, dropping zeros and mutating
/// constants. Every coefficient must belong to the coefficient ring.
pub fn from_terms(f: &RingFactory, terms: impl IntoIterator<Item = (ExpVec, Value)>) -> Result<Value> {
    let ring = f.as_poly().ok_or_else(|| Error::NotAPolynomialRing(print_value(&Value::Factory(f.clone()))))?;
    let mut map = BTreeMap::new();
    for (e, c) in terms {
        if e.len() != ring.nvars() {
            return Err(Error::LengthMismatch(e.len(), ring.nvars()));
        }
        if !ring.coefficients().contains(&c) {
            return Err(Error::WrongCoefficientRing {
                value: print_value(&c),
                ring: print_value(&Value::Factory(ring.coefficients().clone())),
            });
        }
        arith::accumulate(ring, &mut map, e, c)?;
    }
    Ok(arith::normalize(ring, map))
}
