//! Evaluation of parsed statements against an immutable [`Context`].
//!
//! Binary operators coerce their operands to a common ring and then apply
//! that ring's operation. The `.add`/`.subtract`/`.multiply` methods do
//! not coerce: the argument must already be a member of the receiver's
//! ring, as with the underlying library calls.

mod context;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

pub use context::Context;

use crate::coefficients::{mod_make, rat_make};
use crate::coercion::{self, coerce};
use crate::error::{Error, Result};
use crate::polynomial::{generators, value_of, PolyOp, RingFactory, TermOrder};
use crate::syntax::ast::{BinaryOp, Expr, ExprKind, Statement};
use crate::syntax::printer::print_value;
use crate::value::Value;

/// Functions available in every context.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Builtin {
    Frac,
    Mod,
    Pow,
    Gens,
    Print,
    Abs,
    ZZ,
    QQ,
    Zn,
    PolyRing,
}

impl Builtin {
    pub const ALL: [Builtin; 10] = [
        Builtin::Frac,
        Builtin::Mod,
        Builtin::Pow,
        Builtin::Gens,
        Builtin::Print,
        Builtin::Abs,
        Builtin::ZZ,
        Builtin::QQ,
        Builtin::Zn,
        Builtin::PolyRing,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Builtin::Frac => "frac",
            Builtin::Mod => "mod",
            Builtin::Pow => "pow",
            Builtin::Gens => "gens",
            Builtin::Print => "print",
            Builtin::Abs => "abs",
            Builtin::ZZ => "ZZ",
            Builtin::QQ => "QQ",
            Builtin::Zn => "Zn",
            Builtin::PolyRing => "PolyRing",
        }
    }
}

/// Lines written by `print` during an evaluation.
pub type Output = Vec<String>;

fn type_error(msg: impl Into<String>) -> Error {
    Error::Type(msg.into())
}

fn arity(name: &str, args: &[Value], allowed: &[usize]) -> Result<()> {
    if allowed.contains(&args.len()) {
        return Ok(());
    }
    let want = allowed.iter().map(ToString::to_string).collect::<Vec<_>>().join(" or ");
    Err(Error::Arity(format!("{name}() takes {want} argument(s), got {}", args.len())))
}

fn home(v: &Value) -> Result<RingFactory> {
    v.home()
        .ok_or_else(|| type_error(format!("a {} is not a ring element", v.kind_name())))
}

fn integer<'a>(v: &'a Value, what: &str) -> Result<&'a BigInt> {
    match v {
        Value::Integer(n) => Ok(n),
        other => Err(type_error(format!("{what} must be an integer, got a {}", other.kind_name()))),
    }
}

/// A ring given directly or through one of its elements.
fn factory_arg(v: &Value) -> Result<RingFactory> {
    match v {
        Value::Factory(f) => Ok(f.clone()),
        other if other.is_ring_element() => home(other),
        other => Err(type_error(format!("expected a ring, got a {}", other.kind_name()))),
    }
}

/// `a op b` after coercing both operands into a common ring.
pub fn dispatch(op: PolyOp, a: &Value, b: &Value) -> Result<Value> {
    if !a.is_ring_element() || !b.is_ring_element() {
        return Err(type_error(format!(
            "unsupported operand types: {} and {}",
            a.kind_name(),
            b.kind_name()
        )));
    }
    let pair = coerce(a, b)?;
    match op {
        PolyOp::Add => pair.common.add(&pair.left, &pair.right),
        PolyOp::Sub => pair.common.sub(&pair.left, &pair.right),
        PolyOp::Mul => pair.common.mul(&pair.left, &pair.right),
    }
}

/// Equality after coercion for ring elements; structural otherwise.
pub fn equals(a: &Value, b: &Value) -> Result<bool> {
    if a.is_ring_element() && b.is_ring_element() {
        let pair = coerce(a, b)?;
        return Ok(pair.left == pair.right);
    }
    Ok(a == b)
}

pub fn power(a: &Value, e: &Value) -> Result<Value> {
    let e = integer(e, "an exponent")?;
    home(a)?.pow(a, e)
}

pub fn negate(a: &Value) -> Result<Value> {
    home(a)?.neg(a)
}

fn poly_ring(args: &[Value]) -> Result<Value> {
    arity("PolyRing", args, &[2, 3])?;
    let coefficients = factory_arg(&args[0])?;
    let order = match args.get(2) {
        None => TermOrder::Lex,
        Some(Value::Order(o)) => *o,
        Some(other) => return Err(type_error(format!("expected a term order, got a {}", other.kind_name()))),
    };
    let f = match &args[1] {
        Value::Str(list) => RingFactory::poly_from_list(coefficients, list, order)?,
        Value::List(items) => {
            let names = items
                .iter()
                .map(|v| match v {
                    Value::Str(s) => Ok(s.clone()),
                    other => Err(type_error(format!("variable names must be strings, got a {}", other.kind_name()))),
                })
                .collect::<Result<Vec<_>>>()?;
            RingFactory::poly(coefficients, names, order)?
        }
        other => return Err(type_error(format!("expected variable names, got a {}", other.kind_name()))),
    };
    Ok(Value::Factory(f))
}

fn call_builtin(b: Builtin, args: &[Value], out: &mut Output) -> Result<Value> {
    match b {
        Builtin::Frac => {
            arity("frac", args, &[2])?;
            let (n, d) = (integer(&args[0], "a numerator")?, integer(&args[1], "a denominator")?);
            Ok(rat_make(n.clone(), d.clone())?.into())
        }
        Builtin::Mod => {
            arity("mod", args, &[2])?;
            let (v, m) = (integer(&args[0], "a residue")?, integer(&args[1], "a modulus")?);
            Ok(mod_make(v.clone(), m.clone())?.into())
        }
        Builtin::Pow => {
            arity("pow", args, &[2])?;
            power(&args[0], &args[1])
        }
        Builtin::Gens => {
            arity("gens", args, &[1])?;
            Ok(Value::List(generators(&factory_arg(&args[0])?)?))
        }
        Builtin::Print => {
            out.push(args.iter().map(print_value).collect::<Vec<_>>().join(" "));
            Ok(Value::Unit)
        }
        Builtin::Abs => {
            arity("abs", args, &[1])?;
            home(&args[0])?.abs(&args[0])
        }
        Builtin::ZZ => {
            arity("ZZ", args, &[0])?;
            Ok(Value::Factory(RingFactory::Integers))
        }
        Builtin::QQ => {
            arity("QQ", args, &[0])?;
            Ok(Value::Factory(RingFactory::Rationals))
        }
        Builtin::Zn => {
            arity("Zn", args, &[1])?;
            Ok(Value::Factory(RingFactory::modular(integer(&args[0], "a modulus")?.clone())?))
        }
        Builtin::PolyRing => poly_ring(args),
    }
}

fn call_method(recv: &Value, method: &str, args: &[Value]) -> Result<Value> {
    let strict = |op: PolyOp| -> Result<Value> {
        arity(method, args, &[1])?;
        let f = home(recv)?;
        match op {
            PolyOp::Add => f.add(recv, &args[0]),
            PolyOp::Sub => f.sub(recv, &args[0]),
            PolyOp::Mul => f.mul(recv, &args[0]),
        }
    };
    match method {
        "gens" => {
            arity(method, args, &[0])?;
            Ok(Value::List(generators(&factory_arg(recv)?)?))
        }
        "factory" => {
            arity(method, args, &[0])?;
            Ok(Value::Factory(home(recv)?))
        }
        "ring" => {
            arity(method, args, &[0])?;
            match factory_arg(recv)? {
                RingFactory::Poly(ring) => Ok(Value::Factory(ring.coefficients().clone())),
                other => Err(Error::NotAPolynomialRing(print_value(&Value::Factory(other)))),
            }
        }
        "valueOf" => {
            arity(method, args, &[1])?;
            value_of(&factory_arg(recv)?, &args[0])
        }
        "depth" => {
            arity(method, args, &[0])?;
            factory_arg(recv)?;
            Ok(Value::int(coercion::depth(recv) as u64))
        }
        "base" => {
            arity(method, args, &[0])?;
            Ok(Value::Factory(factory_arg(recv)?.base().clone()))
        }
        "add" => strict(PolyOp::Add),
        "subtract" => strict(PolyOp::Sub),
        "multiply" => strict(PolyOp::Mul),
        "negate" => {
            arity(method, args, &[0])?;
            negate(recv)
        }
        "abs" => {
            arity(method, args, &[0])?;
            home(recv)?.abs(recv)
        }
        "pow" => {
            arity(method, args, &[1])?;
            power(recv, &args[0])
        }
        _ => Err(type_error(format!("a {} has no method '{method}'", recv.kind_name()))),
    }
}

fn eval_args(args: &[Expr], ctx: &Context, out: &mut Output) -> Result<Vec<Value>> {
    args.iter().map(|a| eval(a, ctx, out)).collect()
}

pub fn eval(expr: &Expr, ctx: &Context, out: &mut Output) -> Result<Value> {
    eval_kind(expr, ctx, out).map_err(|e| e.at(expr.column))
}

fn eval_kind(expr: &Expr, ctx: &Context, out: &mut Output) -> Result<Value> {
    match &expr.kind {
        ExprKind::Int(text) => Ok(Value::Integer(text.parse().expect("lexer yields decimal digits"))),
        ExprKind::Str(s) => Ok(Value::Str(s.clone())),
        ExprKind::Name(name) => ctx.lookup(name).cloned().ok_or_else(|| Error::Name(name.clone())),
        ExprKind::Qualified(owner, member) => {
            let v = ctx.lookup(owner).ok_or_else(|| Error::Name(owner.clone()))?;
            match (v, TermOrder::from_name(member)) {
                (Value::Builtin(Builtin::PolyRing), Some(order)) => Ok(Value::Order(order)),
                _ => Err(type_error(format!("{owner} has no attribute '{member}'"))),
            }
        }
        ExprKind::Neg(e) => negate(&eval(e, ctx, out)?),
        ExprKind::Binary(op, l, r) => {
            let (a, b) = (eval(l, ctx, out)?, eval(r, ctx, out)?);
            match op {
                BinaryOp::Add => dispatch(PolyOp::Add, &a, &b),
                BinaryOp::Sub => dispatch(PolyOp::Sub, &a, &b),
                BinaryOp::Mul => dispatch(PolyOp::Mul, &a, &b),
                BinaryOp::Pow => power(&a, &b),
                BinaryOp::Eq => equals(&a, &b).map(Value::Bool),
                BinaryOp::Ne => equals(&a, &b).map(|eq| Value::Bool(!eq)),
            }
        }
        ExprKind::Call(name, args) => {
            let callee = ctx.lookup(name).ok_or_else(|| Error::Name(name.clone()))?;
            let Value::Builtin(b) = callee else {
                return Err(type_error(format!("'{name}' is not callable")));
            };
            let b = *b;
            let args = eval_args(args, ctx, out)?;
            call_builtin(b, &args, out)
        }
        ExprKind::MethodCall(recv, method, args) => {
            let recv = eval(recv, ctx, out)?;
            let args = eval_args(args, ctx, out)?;
            call_method(&recv, method, &args)
        }
        ExprKind::List(items) => Ok(Value::List(eval_args(items, ctx, out)?)),
        ExprKind::Index(recv, index) => {
            let recv = eval(recv, ctx, out)?;
            let index = eval(index, ctx, out)?;
            let Value::List(items) = &recv else {
                return Err(type_error(format!("a {} cannot be indexed", recv.kind_name())));
            };
            let i = integer(&index, "an index")?;
            i.to_usize()
                .and_then(|i| items.get(i))
                .cloned()
                .ok_or_else(|| Error::Index { index: i.clone(), len: items.len() })
        }
    }
}

/// Runs one statement. Assignments return the extended context and no
/// value; expression statements return the unchanged context and a value.
pub fn exec(stmt: &Statement, ctx: &Context, out: &mut Output) -> Result<(Context, Option<Value>)> {
    match stmt {
        Statement::Expr(e) => Ok((ctx.clone(), Some(eval(e, ctx, out)?))),
        Statement::Assign { name, expr } => {
            let v = eval(expr, ctx, out)?;
            Ok((ctx.bind_one(name.clone(), v), None))
        }
        Statement::ListAssign { names, expr } => {
            let v = eval(expr, ctx, out)?;
            let Value::List(items) = v else {
                return Err(type_error(format!("cannot unpack a {}", v.kind_name())).at(expr.column));
            };
            if items.len() != names.len() {
                return Err(Error::Arity(format!(
                    "cannot unpack {} value(s) into {} name(s)",
                    items.len(),
                    names.len()
                ))
                .at(expr.column));
            }
            Ok((ctx.bind(names.iter().cloned().zip(items).collect()), None))
        }
    }
}
