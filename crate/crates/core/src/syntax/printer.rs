//! Canonical output forms. Every ring element and ring factory prints as
//! an expression that evaluates back to an equal value and prints the same.

use num_traits::Signed;

use crate::polynomial::{ExpVec, Polynomial, RingFactory};
use crate::value::Value;

pub fn print_value(v: &Value) -> String {
    let mut out = String::new();
    write_value(&mut out, v);
    out
}

fn write_value(out: &mut String, v: &Value) {
    match v {
        Value::Integer(n) => out.push_str(&n.to_string()),
        Value::Rational(r) => out.push_str(&r.to_string()),
        Value::ModInt(m) => out.push_str(&m.to_string()),
        Value::Polynomial(p) => write_polynomial(out, p),
        Value::Factory(f) => write_factory(out, f),
        Value::List(items) => {
            out.push('[');
            for (i, item) in items.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                write_value(out, item);
            }
            out.push(']');
        }
        Value::Str(s) => out.push_str(s),
        Value::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
        Value::Order(o) => out.push_str(&o.to_string()),
        Value::Builtin(b) => out.push_str(b.name()),
        Value::Unit => out.push_str("None"),
    }
}

fn write_factory(out: &mut String, f: &RingFactory) {
    match f {
        RingFactory::Integers => out.push_str("ZZ()"),
        RingFactory::Rationals => out.push_str("QQ()"),
        RingFactory::Modular(m) => out.push_str(&format!("Zn({m})")),
        RingFactory::Poly(ring) => {
            out.push_str("PolyRing(");
            write_factory(out, ring.coefficients());
            out.push_str(&format!(",\"{}\",{})", ring.variables().join(","), ring.order()));
        }
    }
}

/// Whether a coefficient prints with a leading minus that the term joiner
/// should absorb. Multi-term coefficients are parenthesized and never
/// count as negative.
fn is_negative(c: &Value) -> bool {
    match c {
        Value::Integer(n) => n.is_negative(),
        Value::Rational(r) => r.is_negative(),
        Value::Polynomial(p) if p.terms().len() == 1 => p.terms().values().next().is_some_and(is_negative),
        _ => false,
    }
}

fn is_compound(c: &Value) -> bool {
    matches!(c, Value::Polynomial(p) if p.terms().len() > 1)
}

fn negate(c: &Value) -> Value {
    match c {
        Value::Integer(n) => Value::Integer(-n),
        Value::Rational(_) => {
            RingFactory::Rationals.neg(c).expect("rationals are members of QQ")
        }
        Value::Polynomial(p) => p.factory().neg(c).expect("a polynomial is a member of its ring"),
        other => other.clone(),
    }
}

fn write_monomial(out: &mut String, vars: &[String], e: &ExpVec) -> bool {
    let mut wrote = false;
    for (var, exp) in vars.iter().zip(e.exponents()) {
        if exp.bits() == 0 {
            continue;
        }
        if wrote {
            out.push('*');
        }
        out.push_str(var);
        if exp.bits() > 1 {
            out.push_str(&format!("**{exp}"));
        }
        wrote = true;
    }
    wrote
}

fn write_polynomial(out: &mut String, p: &Polynomial) {
    let vars = p.ring().variables();
    for (i, (e, c)) in p.terms_in_order().into_iter().enumerate() {
        let negative = is_negative(c);
        if negative {
            out.push('-');
        } else if i > 0 {
            out.push('+');
        }
        let magnitude = if negative { negate(c) } else { c.clone() };
        if e.is_constant() {
            write_value(out, &magnitude);
            continue;
        }
        if !RingFactory::is_one(&magnitude) {
            if is_compound(&magnitude) {
                out.push('(');
                write_value(out, &magnitude);
                out.push(')');
            } else {
                write_value(out, &magnitude);
            }
            out.push('*');
        }
        write_monomial(out, vars, e);
    }
}

/// Conventional display of a ring, e.g. `ZZ[x][y]`. Not reconstructing.
pub fn print_pretty(f: &RingFactory) -> String {
    match f {
        RingFactory::Integers => "ZZ".into(),
        RingFactory::Rationals => "QQ".into(),
        RingFactory::Modular(m) => format!("Z{m}"),
        RingFactory::Poly(ring) => format!("{}[{}]", print_pretty(ring.coefficients()), ring.variables().join(",")),
    }
}
