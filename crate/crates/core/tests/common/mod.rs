#![allow(dead_code)]

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use symba::coefficients::{mod_make, rat_make};
use symba::coercion::lift;
use symba::evaluator::{dispatch, eval};
use symba::polynomial::{from_terms, generators, value_of, ExpVec, PolyOp};
use symba::syntax::{parse_expr, print_value};
use symba::{Context, RingFactory, TermOrder, Value};

pub const MODULUS: i64 = 11;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Base {
    ZZ,
    QQ,
    Z11,
}

pub const BASES: [Base; 3] = [Base::ZZ, Base::QQ, Base::Z11];

impl Base {
    pub fn factory(self) -> RingFactory {
        match self {
            Base::ZZ => RingFactory::Integers,
            Base::QQ => RingFactory::Rationals,
            Base::Z11 => RingFactory::Modular(MODULUS.into()),
        }
    }
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// A tower of polynomial rings; `levels[0]` is the base ring and
/// `levels[k]` has depth `k`. Each level uses its own variable names.
#[derive(Clone, Debug)]
pub struct Tower {
    pub base: Base,
    pub levels: Vec<RingFactory>,
    pub ctx: Context,
}

const NAMES: [[&str; 3]; 3] = [["a", "b", "c"], ["d", "e", "f"], ["g", "h", "k"]];

impl Tower {
    pub fn random(rng: &mut StdRng, base: Base, depth: usize) -> Tower {
        let mut levels = vec![base.factory()];
        let mut ctx = Context::prelude();
        for names in NAMES.iter().take(depth) {
            let n = rng.gen_range(1..=3);
            let order = *[TermOrder::Lex, TermOrder::Grad].choose(rng).unwrap();
            let f = RingFactory::poly(levels.last().unwrap().clone(), names[..n].iter().copied(), order).unwrap();
            let gens = generators(&f).unwrap();
            ctx = ctx.bind(names[..n].iter().map(|s| s.to_string()).zip(gens).collect());
            levels.push(f);
        }
        Tower { base, levels, ctx }
    }

    pub fn top(&self) -> &RingFactory {
        self.levels.last().unwrap()
    }

    pub fn depth(&self) -> usize {
        self.levels.len() - 1
    }
}

pub fn random_base_element(rng: &mut StdRng, base: Base) -> Value {
    let n: i64 = rng.gen_range(-10..=10);
    match base {
        Base::ZZ => Value::int(n),
        Base::QQ => rat_make(BigInt::from(n), BigInt::from(rng.gen_range(1..=10))).unwrap().into(),
        Base::Z11 => mod_make(BigInt::from(n), BigInt::from(MODULUS)).unwrap().into(),
    }
}

/// A random element of `tower.levels[level]`: up to three terms with
/// exponents at most 5, coefficients drawn one level down.
pub fn random_element(rng: &mut StdRng, tower: &Tower, level: usize) -> Value {
    if level == 0 {
        return random_base_element(rng, tower.base);
    }
    let f = &tower.levels[level];
    let nvars = f.as_poly().unwrap().nvars();
    let nterms = rng.gen_range(1..=3);
    let terms: Vec<(ExpVec, Value)> = (0..nterms)
        .map(|_| {
            let e = ExpVec::from((0..nvars).map(|_| rng.gen_range(0..=5u64)).collect::<Vec<_>>());
            (e, random_element(rng, tower, level - 1))
        })
        .collect();
    from_terms(f, terms).unwrap()
}

/// Any printable value: ring elements at any level, factories and lists.
pub fn random_value(rng: &mut StdRng, tower: &Tower) -> Value {
    match rng.gen_range(0..10) {
        0 => Value::Factory(tower.levels[rng.gen_range(0..tower.levels.len())].clone()),
        1 => {
            let len = rng.gen_range(0..=3);
            Value::List((0..len).map(|_| random_at_any_level(rng, tower)).collect())
        }
        _ => random_at_any_level(rng, tower),
    }
}

fn random_at_any_level(rng: &mut StdRng, tower: &Tower) -> Value {
    let level = rng.gen_range(0..=tower.depth());
    random_element(rng, tower, level)
}

pub fn random_tower(rng: &mut StdRng) -> Tower {
    let base = *BASES.choose(rng).unwrap();
    let depth = rng.gen_range(1..=3);
    Tower::random(rng, base, depth)
}

/// eval(parse(print(v))) == v and the reprint is string-identical.
pub fn round_trip(v: &Value, ctx: &Context) -> Result<(), String> {
    let printed = print_value(v);
    let expr = parse_expr(&printed).map_err(|e| format!("{printed}: {e}"))?;
    let back = eval(&expr, ctx, &mut Vec::new()).map_err(|e| format!("{printed}: {e}"))?;
    if back != *v {
        return Err(format!("{printed}: evaluates to a different value {back:?}"));
    }
    let reprinted = print_value(&back);
    if reprinted != printed {
        return Err(format!("{printed}: reprints as {reprinted}"));
    }
    Ok(())
}

/// Ring axioms on three members of `f`, structural equality.
pub fn ring_axioms(f: &RingFactory, a: &Value, b: &Value, c: &Value) -> Result<(), String> {
    let err = |what: &str| format!("{what} fails for a={a} b={b} c={c}");
    let add = |x: &Value, y: &Value| f.add(x, y).unwrap();
    let mul = |x: &Value, y: &Value| f.mul(x, y).unwrap();
    let (zero, one) = (f.zero(), f.one());
    let results = [
        (add(a, &add(b, c)), add(&add(a, b), c), "additive associativity"),
        (mul(a, &mul(b, c)), mul(&mul(a, b), c), "multiplicative associativity"),
        (mul(a, &add(b, c)), add(&mul(a, b), &mul(a, c)), "distributivity"),
        (add(a, b), add(b, a), "additive commutativity"),
        (mul(a, b), mul(b, a), "multiplicative commutativity"),
        (add(a, &zero), a.clone(), "additive identity"),
        (mul(a, &one), a.clone(), "multiplicative identity"),
        (f.sub(a, a).unwrap(), zero.clone(), "additive inverse"),
    ];
    for (lhs, rhs, what) in results {
        lhs.validate().map_err(|e| format!("{}: {e}", err(what)))?;
        if lhs != rhs {
            return Err(err(what));
        }
    }
    Ok(())
}

/// `c op p` via automatic coercion against the hand-built nested
/// `value_of` chain from `c`'s level up to `p`'s ring, in both operand
/// orders.
pub fn coercion_oracle(tower: &Tower, c: &Value, level: usize, p: &Value) -> Result<(), String> {
    let top = tower.top();
    let mut manual = c.clone();
    for f in &tower.levels[level + 1..] {
        manual = value_of(f, &manual).map_err(|e| e.to_string())?;
    }
    let lifted = lift(top, c).map_err(|e| e.to_string())?;
    if lifted.value != manual || lifted.ring != *top {
        return Err(format!("lift of {c} disagrees with the value_of chain"));
    }
    for op in [PolyOp::Add, PolyOp::Sub, PolyOp::Mul] {
        let expected = match op {
            PolyOp::Add => top.add(&manual, p),
            PolyOp::Sub => top.sub(&manual, p),
            PolyOp::Mul => top.mul(&manual, p),
        }
        .map_err(|e| e.to_string())?;
        let got = dispatch(op, c, p).map_err(|e| e.to_string())?;
        if got != expected {
            return Err(format!("{op:?}({c}, {p}): dispatch gave {got}, manual chain gave {expected}"));
        }
        let expected_rev = match op {
            PolyOp::Add => top.add(p, &manual),
            PolyOp::Sub => top.sub(p, &manual),
            PolyOp::Mul => top.mul(p, &manual),
        }
        .map_err(|e| e.to_string())?;
        let got_rev = dispatch(op, p, c).map_err(|e| e.to_string())?;
        if got_rev != expected_rev {
            return Err(format!("{op:?}({p}, {c}) disagrees with the manual chain"));
        }
    }
    Ok(())
}

#[derive(Clone, Copy, Debug)]
pub enum ModOp {
    Add(i64),
    Sub(i64),
    Mul(i64),
    Neg,
}

pub fn random_mod_ops(rng: &mut StdRng) -> Vec<ModOp> {
    (0..rng.gen_range(0..=20))
        .map(|_| {
            let k = rng.gen_range(-1000..=1000);
            match rng.gen_range(0..4) {
                0 => ModOp::Add(k),
                1 => ModOp::Sub(k),
                2 => ModOp::Mul(k),
                _ => ModOp::Neg,
            }
        })
        .collect()
}

/// Runs the sequence over plain integers and reduces at the end, versus
/// in the residue ring throughout.
pub fn mod_oracle(start: i64, modulus: i64, ops: &[ModOp]) -> Result<(), String> {
    use symba::coefficients::RingElement;
    let mut plain = BigInt::from(start);
    for op in ops {
        plain = match *op {
            ModOp::Add(k) => plain + k,
            ModOp::Sub(k) => plain - k,
            ModOp::Mul(k) => plain * k,
            ModOp::Neg => -plain,
        };
    }
    let m = BigInt::from(modulus);
    let expected = ((plain % &m) + &m) % &m;
    let mk = |v: i64| mod_make(BigInt::from(v), m.clone()).unwrap();
    let mut acc = mk(start);
    for op in ops {
        acc = match *op {
            ModOp::Add(k) => acc.add(&mk(k)),
            ModOp::Sub(k) => acc.sub(&mk(k)),
            ModOp::Mul(k) => acc.mul(&mk(k)),
            ModOp::Neg => Ok(acc.neg()),
        }
        .map_err(|e| e.to_string())?;
    }
    if *acc.residue() != expected {
        return Err(format!("start {start} mod {modulus} with {ops:?}: got {acc}, expected {expected}"));
    }
    Ok(())
}
