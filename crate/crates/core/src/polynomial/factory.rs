use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};

use super::order::TermOrder;
use super::{arith, PolyOp};
use crate::coefficients::{mod_make, Integer, Quotient, RingElement};
use crate::error::{Error, Result};
use crate::syntax::printer::print_value;
use crate::value::Value;

/// A first-class description of a ring.
///
/// Equality is structural: two factories built independently from the same
/// parts are the same ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RingFactory {
    Integers,
    Rationals,
    Modular(Integer),
    Poly(Arc<PolyRing>),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyRing {
    coefficients: RingFactory,
    variables: Vec<String>,
    order: TermOrder,
}

impl PolyRing {
    pub fn coefficients(&self) -> &RingFactory {
        &self.coefficients
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    pub fn nvars(&self) -> usize {
        self.variables.len()
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl RingFactory {
    pub fn modular(modulus: Integer) -> Result<RingFactory> {
        if modulus < BigInt::from(2) {
            return Err(Error::BadModulus(modulus));
        }
        Ok(RingFactory::Modular(modulus))
    }

    pub fn poly<S: Into<String>>(
        coefficients: RingFactory,
        variables: impl IntoIterator<Item = S>,
        order: TermOrder,
    ) -> Result<RingFactory> {
        let variables: Vec<String> = variables.into_iter().map(Into::into).collect();
        if variables.is_empty() {
            return Err(Error::InvalidRing("a polynomial ring needs at least one variable".into()));
        }
        for (i, v) in variables.iter().enumerate() {
            if !is_identifier(v) {
                return Err(Error::InvalidRing(format!("'{v}' is not a variable name")));
            }
            if variables[..i].contains(v) {
                return Err(Error::InvalidRing(format!("variable '{v}' declared twice")));
            }
        }
        Ok(RingFactory::Poly(Arc::new(PolyRing {
            coefficients,
            variables,
            order,
        })))
    }

    /// Splits a comma separated variable list such as `"B,S"`.
    pub fn poly_from_list(coefficients: RingFactory, list: &str, order: TermOrder) -> Result<RingFactory> {
        Self::poly(coefficients, list.split(',').map(str::trim), order)
    }

    pub fn as_poly(&self) -> Option<&Arc<PolyRing>> {
        match self {
            RingFactory::Poly(r) => Some(r),
            _ => None,
        }
    }

    /// Whether `v` is a canonical element of this ring. Constants of a
    /// polynomial ring are stored in their mutated form, so any element of
    /// the coefficient ring is also an element here.
    pub fn contains(&self, v: &Value) -> bool {
        match (self, v) {
            (RingFactory::Integers, Value::Integer(_)) => true,
            (RingFactory::Rationals, Value::Integer(_) | Value::Rational(_)) => true,
            (RingFactory::Modular(m), Value::ModInt(x)) => x.modulus() == m,
            (RingFactory::Poly(ring), Value::Polynomial(p)) if Arc::ptr_eq(ring, p.ring()) || **ring == **p.ring() => true,
            (RingFactory::Poly(ring), v) => ring.coefficients.contains(v),
            _ => false,
        }
    }

    pub fn zero(&self) -> Value {
        match self {
            RingFactory::Integers | RingFactory::Rationals => Value::Integer(BigInt::zero()),
            RingFactory::Modular(m) => Value::ModInt(mod_make(BigInt::zero(), m.clone()).expect("validated modulus")),
            RingFactory::Poly(ring) => ring.coefficients.zero(),
        }
    }

    pub fn one(&self) -> Value {
        match self {
            RingFactory::Integers | RingFactory::Rationals => Value::Integer(BigInt::from(1)),
            RingFactory::Modular(m) => Value::ModInt(mod_make(BigInt::from(1), m.clone()).expect("validated modulus")),
            RingFactory::Poly(ring) => ring.coefficients.one(),
        }
    }

    /// Zero test for a canonical element. A `Polynomial` value is never zero.
    pub fn is_zero(v: &Value) -> bool {
        match v {
            Value::Integer(n) => Zero::is_zero(n),
            Value::ModInt(x) => x.is_zero_element(),
            _ => false,
        }
    }

    pub fn is_one(v: &Value) -> bool {
        match v {
            Value::Integer(n) => *n == BigInt::from(1),
            Value::ModInt(x) => x.is_one(),
            _ => false,
        }
    }

    fn require(&self, v: &Value) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::FactoryMismatch(print_value(v), print_value(&Value::Factory(self.clone()))))
        }
    }

    pub fn add(&self, a: &Value, b: &Value) -> Result<Value> {
        self.checked(PolyOp::Add, a, b)
    }

    pub fn sub(&self, a: &Value, b: &Value) -> Result<Value> {
        self.checked(PolyOp::Sub, a, b)
    }

    pub fn mul(&self, a: &Value, b: &Value) -> Result<Value> {
        self.checked(PolyOp::Mul, a, b)
    }

    pub fn neg(&self, a: &Value) -> Result<Value> {
        self.require(a)?;
        Ok(self.neg_unchecked(a))
    }

    fn checked(&self, op: PolyOp, a: &Value, b: &Value) -> Result<Value> {
        self.require(a)?;
        self.require(b)?;
        self.binary_unchecked(op, a, b)
    }

    /// Ring operation on operands already known to be members.
    pub(crate) fn binary_unchecked(&self, op: PolyOp, a: &Value, b: &Value) -> Result<Value> {
        match self {
            RingFactory::Integers => {
                let (Value::Integer(x), Value::Integer(y)) = (a, b) else { unreachable!("membership checked") };
                Ok(Value::Integer(base_op(op, x, y)?))
            }
            RingFactory::Rationals => {
                let (x, y) = (as_quotient(a), as_quotient(b));
                Ok(base_op(op, &x, &y)?.into())
            }
            RingFactory::Modular(_) => {
                let (Value::ModInt(x), Value::ModInt(y)) = (a, b) else { unreachable!("membership checked") };
                Ok(Value::ModInt(base_op(op, x, y)?))
            }
            RingFactory::Poly(ring) => arith::binary(ring, op, a, b),
        }
    }

    pub(crate) fn neg_unchecked(&self, a: &Value) -> Value {
        match (self, a) {
            (RingFactory::Poly(ring), _) => arith::neg(ring, a),
            (_, Value::Integer(n)) => Value::Integer(-n),
            (_, Value::Rational(_)) => as_quotient(a).neg().into(),
            (_, Value::ModInt(x)) => Value::ModInt(x.neg()),
            _ => unreachable!("membership checked"),
        }
    }

    /// `a` raised to a non-negative integer power; `a**0` is the ring's one.
    pub fn pow(&self, a: &Value, exp: &Integer) -> Result<Value> {
        self.require(a)?;
        let Some(e) = exp.to_biguint() else {
            return Err(Error::NegativeExponent(exp.clone()));
        };
        self.pow_unchecked(a, &e)
    }

    pub(crate) fn pow_unchecked(&self, a: &Value, e: &BigUint) -> Result<Value> {
        match (self, a) {
            (RingFactory::Poly(ring), Value::Polynomial(_)) => arith::pow(ring, a, e),
            (RingFactory::Poly(ring), _) => ring.coefficients.pow_unchecked(a, e),
            (_, Value::Integer(n)) if *self == RingFactory::Integers => Ok(Value::Integer(RingElement::pow(n, e)?)),
            (_, Value::Integer(_) | Value::Rational(_)) => Ok(as_quotient(a).pow(e)?.into()),
            (_, Value::ModInt(x)) => Ok(Value::ModInt(x.pow(e)?)),
            _ => unreachable!("membership checked"),
        }
    }

    /// Sign normalization: for polynomials the sign of the coefficient of
    /// the highest term decides, recursively down the tower.
    pub fn abs(&self, a: &Value) -> Result<Value> {
        self.require(a)?;
        if self.leading_sign_negative(a)? {
            Ok(self.neg_unchecked(a))
        } else {
            Ok(a.clone())
        }
    }

    fn leading_sign_negative(&self, a: &Value) -> Result<bool> {
        match a {
            Value::Integer(n) => Ok(n.is_negative()),
            Value::Rational(r) => Ok(r.is_negative()),
            Value::ModInt(_) => Err(Error::NotOrdered(print_value(&Value::Factory(self.clone())))),
            Value::Polynomial(p) => {
                let (_, lc) = p.leading_term();
                p.ring().coefficients.leading_sign_negative(lc)
                    .map_err(|_| Error::NotOrdered(print_value(&Value::Factory(self.clone()))))
            }
            _ => unreachable!("membership checked"),
        }
    }

    /// Number of polynomial levels above the base ring.
    pub fn depth(&self) -> usize {
        match self {
            RingFactory::Poly(ring) => 1 + ring.coefficients.depth(),
            _ => 0,
        }
    }

    /// The bottom, non-polynomial ring of the tower.
    pub fn base(&self) -> &RingFactory {
        match self {
            RingFactory::Poly(ring) => ring.coefficients.base(),
            other => other,
        }
    }

    /// Whether `other` is this ring or occurs in its coefficient chain.
    pub fn has_in_chain(&self, other: &RingFactory) -> bool {
        self == other
            || match self {
                RingFactory::Poly(ring) => ring.coefficients.has_in_chain(other),
                _ => false,
            }
    }
}

fn as_quotient(v: &Value) -> Quotient {
    match v {
        Value::Integer(n) => Quotient::Integer(n.clone()),
        Value::Rational(r) => Quotient::Rational(r.clone()),
        _ => unreachable!("membership checked"),
    }
}

fn base_op<T: RingElement>(op: PolyOp, x: &T, y: &T) -> Result<T> {
    match op {
        PolyOp::Add => x.add(y),
        PolyOp::Sub => x.sub(y),
        PolyOp::Mul => x.mul(y),
    }
}
