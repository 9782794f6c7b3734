use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigUint;

use super::{ExpVec, PolyOp, PolyRing, Polynomial, RingFactory};
use crate::coefficients::pow_by_squaring;
use crate::error::Result;
use crate::value::Value;

type Terms = BTreeMap<ExpVec, Value>;

/// The term map of a ring member; constants become a single constant term.
pub(super) fn embed(ring: &Arc<PolyRing>, v: &Value) -> Terms {
    match v {
        Value::Polynomial(p) if p.ring == *ring => p.terms.clone(),
        c if RingFactory::is_zero(c) => Terms::new(),
        c => Terms::from([(ExpVec::zero(ring.nvars()), c.clone())]),
    }
}

pub(super) fn normalize(ring: &Arc<PolyRing>, terms: Terms) -> Value {
    if terms.is_empty() {
        return ring.coefficients().zero();
    }
    if terms.len() == 1 {
        let (e, _) = terms.first_key_value().expect("one term");
        if e.is_constant() {
            return terms.into_values().next().expect("one term");
        }
    }
    Value::Polynomial(Polynomial {
        ring: ring.clone(),
        terms,
    })
}

pub(super) fn accumulate(ring: &Arc<PolyRing>, terms: &mut Terms, e: ExpVec, c: Value) -> Result<()> {
    if RingFactory::is_zero(&c) {
        return Ok(());
    }
    match terms.entry(e) {
        Entry::Vacant(slot) => {
            slot.insert(c);
        }
        Entry::Occupied(mut slot) => {
            let sum = ring.coefficients().binary_unchecked(PolyOp::Add, slot.get(), &c)?;
            if RingFactory::is_zero(&sum) {
                slot.remove();
            } else {
                slot.insert(sum);
            }
        }
    }
    Ok(())
}

pub(super) fn binary(ring: &Arc<PolyRing>, op: PolyOp, a: &Value, b: &Value) -> Result<Value> {
    let (x, y) = (embed(ring, a), embed(ring, b));
    let terms = match op {
        PolyOp::Add => add_terms(ring, x, &y, false)?,
        PolyOp::Sub => add_terms(ring, x, &y, true)?,
        PolyOp::Mul => mul_terms(ring, &x, &y)?,
    };
    Ok(normalize(ring, terms))
}

fn add_terms(ring: &Arc<PolyRing>, mut acc: Terms, other: &Terms, negate: bool) -> Result<Terms> {
    let coeffs = ring.coefficients();
    for (e, c) in other {
        let c = if negate { coeffs.neg_unchecked(c) } else { c.clone() };
        accumulate(ring, &mut acc, e.clone(), c)?;
    }
    Ok(acc)
}

fn mul_terms(ring: &Arc<PolyRing>, x: &Terms, y: &Terms) -> Result<Terms> {
    let coeffs = ring.coefficients();
    let mut acc = Terms::new();
    for (ea, ca) in x {
        for (eb, cb) in y {
            let c = coeffs.binary_unchecked(PolyOp::Mul, ca, cb)?;
            accumulate(ring, &mut acc, ea.add(eb), c)?;
        }
    }
    Ok(acc)
}

pub(super) fn neg(ring: &Arc<PolyRing>, a: &Value) -> Value {
    let coeffs = ring.coefficients();
    match a {
        Value::Polynomial(p) => Value::Polynomial(Polynomial {
            ring: p.ring.clone(),
            terms: p.terms.iter().map(|(e, c)| (e.clone(), coeffs.neg_unchecked(c))).collect(),
        }),
        c => coeffs.neg_unchecked(c),
    }
}

pub(super) fn pow(ring: &Arc<PolyRing>, a: &Value, e: &BigUint) -> Result<Value> {
    let one = ring.coefficients().one();
    pow_by_squaring(one, a, e, |x, y| binary(ring, PolyOp::Mul, x, y))
}
