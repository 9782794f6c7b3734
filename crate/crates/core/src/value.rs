use num_bigint::BigInt;

use crate::coefficients::{Integer, ModInt, Quotient, Rational};
use crate::evaluator::Builtin;
use crate::polynomial::{Polynomial, RingFactory, TermOrder};

/// Everything an expression can evaluate to.
///
/// Ring elements (`Integer`, `Rational`, `ModInt`, `Polynomial`) are always
/// held in normalized form, which makes derived equality structural
/// equality of the underlying mathematics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Integer(Integer),
    Rational(Rational),
    ModInt(ModInt),
    Polynomial(Polynomial),
    Factory(RingFactory),
    List(Vec<Value>),
    /// Prints without its quotes, so a string is never symbolic.
    Str(String),
    Bool(bool),
    Order(TermOrder),
    Builtin(Builtin),
    /// Result of `print`; never echoed.
    Unit,
}

impl Value {
    pub fn int(n: impl Into<BigInt>) -> Value {
        Value::Integer(n.into())
    }

    pub fn is_ring_element(&self) -> bool {
        matches!(self, Value::Integer(_) | Value::Rational(_) | Value::ModInt(_) | Value::Polynomial(_))
    }

    /// The ring this element naturally lives in, before any promotion.
    pub fn home(&self) -> Option<RingFactory> {
        match self {
            Value::Integer(_) => Some(RingFactory::Integers),
            Value::Rational(_) => Some(RingFactory::Rationals),
            Value::ModInt(m) => Some(RingFactory::Modular(m.modulus().clone())),
            Value::Polynomial(p) => Some(p.factory()),
            _ => None,
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            Value::Integer(_) => "integer",
            Value::Rational(_) => "rational",
            Value::ModInt(_) => "modular integer",
            Value::Polynomial(_) => "polynomial",
            Value::Factory(_) => "ring",
            Value::List(_) => "list",
            Value::Str(_) => "string",
            Value::Bool(_) => "boolean",
            Value::Order(_) => "term order",
            Value::Builtin(_) => "builtin",
            Value::Unit => "None",
        }
    }

    /// Deep check of normalization invariants.
    pub fn validate(&self) -> Result<(), String> {
        match self {
            Value::Rational(r) => {
                use num_integer::Integer as _;
                if *r.denom() <= BigInt::from(1) || !r.numer().gcd(r.denom()).eq(&BigInt::from(1)) {
                    return Err(format!("unnormalized rational {r}"));
                }
                Ok(())
            }
            Value::ModInt(m) => {
                if m.residue() < &BigInt::from(0) || m.residue() >= m.modulus() {
                    return Err(format!("residue out of range in {m}"));
                }
                Ok(())
            }
            Value::Polynomial(p) => p.validate(),
            Value::List(items) => items.iter().try_for_each(Value::validate),
            _ => Ok(()),
        }
    }
}

impl From<Quotient> for Value {
    fn from(q: Quotient) -> Value {
        match q {
            Quotient::Integer(n) => Value::Integer(n),
            Quotient::Rational(r) => Value::Rational(r),
        }
    }
}

impl From<ModInt> for Value {
    fn from(m: ModInt) -> Value {
        Value::ModInt(m)
    }
}

impl From<RingFactory> for Value {
    fn from(f: RingFactory) -> Value {
        Value::Factory(f)
    }
}

impl std::fmt::Display for Value {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&crate::syntax::printer::print_value(self))
    }
}
