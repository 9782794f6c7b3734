//! Moving values between the rings of a tower so that binary operations
//! see two members of one ring.
//!
//! Integers first promote into the other operand's base ring; the shallower
//! operand is then lifted through nested [`value_of`] embeddings into the
//! deeper operand's ring. Rings that are not related by a coefficient chain
//! are rejected rather than unified.

use crate::coefficients::mod_make;
use crate::error::{Error, Result};
use crate::polynomial::{value_of, RingFactory};
use crate::syntax::printer::print_value;
use crate::value::Value;

/// Two operands that are both members of `common`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoercionPair {
    pub left: Value,
    pub right: Value,
    pub common: RingFactory,
}

/// A lifted value together with the ring it was lifted into. The value
/// itself stays in canonical (possibly mutated) form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lifted {
    pub value: Value,
    pub ring: RingFactory,
}

fn factory_of(v: &Value) -> Option<RingFactory> {
    match v {
        Value::Factory(f) => Some(f.clone()),
        other => other.home(),
    }
}

/// Tower depth of a ring, or of the ring a value lives in.
pub fn depth(v: &Value) -> usize {
    factory_of(v).map_or(0, |f| f.depth())
}

/// Bottom ring of the tower of a ring or ring element.
pub fn base(v: &Value) -> Option<RingFactory> {
    factory_of(v).map(|f| f.base().clone())
}

fn show(f: &RingFactory) -> String {
    print_value(&Value::Factory(f.clone()))
}

/// Embeds `v` into `target`, one `value_of` per level between its home ring
/// and `target`.
pub fn lift(target: &RingFactory, v: &Value) -> Result<Lifted> {
    let home = v
        .home()
        .ok_or_else(|| Error::Type(format!("cannot lift a {} into a ring", v.kind_name())))?;
    let value = lift_from(target, v, &home)?;
    Ok(Lifted {
        value,
        ring: target.clone(),
    })
}

fn lift_from(target: &RingFactory, v: &Value, home: &RingFactory) -> Result<Value> {
    if target == home {
        return Ok(v.clone());
    }
    match target {
        RingFactory::Poly(ring) => {
            let inner = lift_from(ring.coefficients(), v, home)?;
            value_of(target, &inner)
        }
        // integers map canonically into every base ring
        RingFactory::Rationals if matches!(v, Value::Integer(_)) => Ok(v.clone()),
        RingFactory::Modular(m) if matches!(v, Value::Integer(_)) => {
            let Value::Integer(n) = v else { unreachable!() };
            Ok(Value::ModInt(mod_make(n.clone(), m.clone())?))
        }
        _ => Err(Error::NotInTower {
            value: print_value(v),
            ring: show(target),
        }),
    }
}

/// Integer operands adopt the other operand's base ring.
fn promote(v: &Value, other: &Value) -> Result<(Value, RingFactory)> {
    if let Value::Integer(n) = v {
        match other.home().map(|h| h.base().clone()) {
            Some(RingFactory::Rationals) => return Ok((v.clone(), RingFactory::Rationals)),
            Some(RingFactory::Modular(m)) => {
                let x = mod_make(n.clone(), m.clone())?;
                return Ok((Value::ModInt(x), RingFactory::Modular(m)));
            }
            _ => {}
        }
    }
    let home = v
        .home()
        .ok_or_else(|| Error::Type(format!("a {} is not a ring element", v.kind_name())))?;
    Ok((v.clone(), home))
}

fn incompatible(a: &RingFactory, b: &RingFactory) -> Error {
    match (a.base(), b.base()) {
        (RingFactory::Modular(m), RingFactory::Modular(n)) if m != n => Error::ModulusMismatch(m.clone(), n.clone()),
        _ => Error::IncompatibleRings(show(a), show(b)),
    }
}

pub fn coerce(a: &Value, b: &Value) -> Result<CoercionPair> {
    let (a, ha) = promote(a, b)?;
    let (b, hb) = promote(b, &a)?;
    let (da, db) = (ha.depth(), hb.depth());
    if da == db {
        if ha != hb {
            return Err(incompatible(&ha, &hb));
        }
        return Ok(CoercionPair {
            left: a,
            right: b,
            common: ha,
        });
    }
    let (common, left, right) = if da < db {
        let lifted = lift_from(&hb, &a, &ha).map_err(|_| incompatible(&ha, &hb))?;
        (hb, lifted, b)
    } else {
        let lifted = lift_from(&ha, &b, &hb).map_err(|_| incompatible(&ha, &hb))?;
        (ha, a, lifted)
    };
    Ok(CoercionPair { left, right, common })
}
