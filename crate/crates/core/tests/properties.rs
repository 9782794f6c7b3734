mod common;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{Pow, Signed};
use proptest::prelude::*;
use rand::Rng;

use symba::coefficients::{rat_make, Quotient};
use symba::coercion::{coerce, lift};
use symba::evaluator::{eval, Context};
use symba::repl::{run_interactive, Transcript};
use symba::syntax::ast::{BinaryOp, Expr, ExprKind};
use symba::syntax::{parse, parse_expr, print_value};
use symba::{RingFactory, Value};

use common::*;

/// Total degree in the variables of `f` itself; lower-level values are
/// constants there.
fn degree(f: &RingFactory, v: &Value) -> u64 {
    match v {
        Value::Polynomial(p) if p.factory() == *f => p.total_degree().try_into().unwrap(),
        _ => 0,
    }
}

fn run(src: &str) -> Value {
    eval(&parse_expr(src).unwrap(), &Context::prelude(), &mut Vec::new()).unwrap()
}

// ---- coefficients ----

/// Lowest terms by trial division, sign carried by the numerator.
fn reduce_by_trial(n: i64, d: i64) -> (i64, i64) {
    let (mut n, mut d) = if d < 0 { (-n, -d) } else { (n, d) };
    let mut k = 2;
    while k <= d {
        if n % k == 0 && d % k == 0 {
            n /= k;
            d /= k;
        } else {
            k += 1;
        }
    }
    if n == 0 {
        d = 1;
    }
    (n, d)
}

#[test]
fn rat_make_agrees_with_trial_division() {
    for n in -50..=50i64 {
        for d in (-50..=50i64).filter(|&d| d != 0) {
            let (rn, rd) = reduce_by_trial(n, d);
            let expected = if rd == 1 { format!("{rn}") } else { format!("frac({rn},{rd})") };
            let got: Value = rat_make(n.into(), d.into()).unwrap().into();
            assert_eq!(print_value(&got), expected, "{n}/{d}");
        }
    }
}

fn cross_equal(q: &Quotient, n: i128, d: i128) -> bool {
    let (qn, qd) = q.parts();
    qn * BigInt::from(d) == qd * BigInt::from(n)
}

proptest! {
    #[test]
    fn rational_ops_match_cross_multiplication(a in -50i128..=50, b in 1i128..=50, c in -50i128..=50, e in 1i128..=50) {
        use symba::coefficients::RingElement;
        let x = rat_make(a.into(), b.into()).unwrap();
        let y = rat_make(c.into(), e.into()).unwrap();
        prop_assert!(cross_equal(&x.add(&y).unwrap(), a * e + c * b, b * e));
        prop_assert!(cross_equal(&x.sub(&y).unwrap(), a * e - c * b, b * e));
        prop_assert!(cross_equal(&x.mul(&y).unwrap(), a * c, b * e));
        let (n, d) = x.mul(&y).unwrap().parts();
        prop_assert!(d.is_positive());
        prop_assert_eq!(n.gcd(&d), BigInt::from(1));
    }

    #[test]
    fn integers_match_native_arithmetic(a in -(1i64 << 31)..(1i64 << 31), b in -(1i64 << 31)..(1i64 << 31)) {
        let zz = RingFactory::Integers;
        let (x, y) = (Value::int(a), Value::int(b));
        prop_assert_eq!(zz.add(&x, &y).unwrap(), Value::int(a + b));
        prop_assert_eq!(zz.sub(&x, &y).unwrap(), Value::int(a - b));
        prop_assert_eq!(zz.mul(&x, &y).unwrap(), Value::int(a * b));
        prop_assert_eq!(run(&format!("({a})*({b})-({a})")), Value::int(a * b - a));
    }
}

// ---- towers ----

#[test]
fn lift_is_transitive() {
    let mut rng = rng(11);
    for i in 0..100 {
        let tower = Tower::random(&mut rng, BASES[i % 3], 3);
        let c = random_element(&mut rng, &tower, 0);
        let direct = lift(tower.top(), &c).unwrap().value;
        let middle = lift(&tower.levels[2], &c).unwrap().value;
        assert_eq!(lift(tower.top(), &middle).unwrap().value, direct);
    }
}

#[test]
fn coerce_is_symmetric() {
    let mut rng = rng(12);
    for _ in 0..200 {
        let tower = random_tower(&mut rng);
        let (la, lb) = (rng.gen_range(0..=tower.depth()), rng.gen_range(0..=tower.depth()));
        let a = random_element(&mut rng, &tower, la);
        let b = random_element(&mut rng, &tower, lb);
        let ab = coerce(&a, &b).unwrap();
        let ba = coerce(&b, &a).unwrap();
        assert_eq!((ab.left, ab.right, ab.common), (ba.right, ba.left, ba.common));
    }
}

#[test]
fn pow_is_repeated_multiplication() {
    let mut rng = rng(13);
    for _ in 0..150 {
        let tower = random_tower(&mut rng);
        let f = tower.top();
        let a = random_element(&mut rng, &tower, tower.depth().min(2));
        let mut acc = f.one();
        for e in 0..=6u32 {
            assert_eq!(f.pow(&a, &e.into()).unwrap(), acc, "{a}**{e}");
            acc = f.mul(&acc, &a).unwrap();
        }
    }
}

#[test]
fn degree_bounds() {
    let mut rng = rng(14);
    for _ in 0..300 {
        let tower = random_tower(&mut rng);
        let f = tower.top();
        let a = random_element(&mut rng, &tower, tower.depth());
        let b = random_element(&mut rng, &tower, tower.depth());
        let (da, db) = (degree(f, &a), degree(f, &b));
        assert!(degree(f, &f.add(&a, &b).unwrap()) <= da.max(db));
        // every base here is an integral domain, so nonzero degrees add exactly
        if !RingFactory::is_zero(&a) && !RingFactory::is_zero(&b) {
            let prod = f.mul(&a, &b).unwrap();
            assert_eq!(degree(f, &prod), da + db, "({a})*({b})");
        }
    }
}

// ---- syntax ----

fn node(kind: ExprKind) -> Expr {
    Expr::new(kind, 1)
}

fn binary(op: BinaryOp, l: Expr, r: Expr) -> Expr {
    node(ExprKind::Binary(op, Box::new(l), Box::new(r)))
}

fn arb_expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        (0u32..20).prop_map(|n| node(ExprKind::Int(n.to_string()))),
        prop::sample::select(vec!["x", "y", "lex"]).prop_map(|n| node(ExprKind::Name(n.into()))),
        Just(node(ExprKind::Str("a,b".into()))),
        Just(node(ExprKind::Qualified("PolyRing".into(), "grad".into()))),
    ];
    let ops = vec![BinaryOp::Add, BinaryOp::Sub, BinaryOp::Mul, BinaryOp::Pow, BinaryOp::Eq, BinaryOp::Ne];
    leaf.prop_recursive(6, 64, 3, move |inner| {
        prop_oneof![
            inner.clone().prop_map(|e| node(ExprKind::Neg(Box::new(e)))),
            (prop::sample::select(ops.clone()), inner.clone(), inner.clone()).prop_map(|(op, l, r)| binary(op, l, r)),
            prop::collection::vec(inner.clone(), 0..3).prop_map(|args| node(ExprKind::Call("frac".into(), args))),
            (inner.clone(), prop::collection::vec(inner.clone(), 0..2))
                .prop_map(|(recv, args)| node(ExprKind::MethodCall(Box::new(recv), "add".into(), args))),
            prop::collection::vec(inner.clone(), 0..3).prop_map(|items| node(ExprKind::List(items))),
            (inner.clone(), inner).prop_map(|(l, i)| node(ExprKind::Index(Box::new(l), Box::new(i)))),
        ]
    })
}

/// Arithmetic trees over integer literals with small literal exponents,
/// paired with their value computed directly on the tree.
fn arb_arith() -> impl Strategy<Value = (Expr, BigInt)> {
    let leaf = (0i64..10).prop_map(|n| (node(ExprKind::Int(n.to_string())), BigInt::from(n)));
    leaf.prop_recursive(6, 48, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|(e, v)| (node(ExprKind::Neg(Box::new(e))), -v)),
            (inner.clone(), inner.clone()).prop_map(|((l, a), (r, b))| (binary(BinaryOp::Add, l, r), a + b)),
            (inner.clone(), inner.clone()).prop_map(|((l, a), (r, b))| (binary(BinaryOp::Sub, l, r), a - b)),
            (inner.clone(), inner.clone()).prop_map(|((l, a), (r, b))| (binary(BinaryOp::Mul, l, r), a * b)),
            (inner, 0u32..4).prop_map(|((l, a), k)| {
                (binary(BinaryOp::Pow, l, node(ExprKind::Int(k.to_string()))), a.pow(k))
            }),
        ]
    })
}

const TOKENS: &[&str] = &[
    "x", "y", "1", "23", "+", "-", "*", "**", "==", "!=", "(", ")", "[", "]", ",", ".", "=", "\"s\"", "frac", "gens",
    " ", "#", ":", "PolyRing", "lex",
];

proptest! {
    #[test]
    fn printed_trees_reparse_to_themselves(e in arb_expr()) {
        let src = e.to_string();
        let back = parse_expr(&src);
        prop_assert!(back.is_ok(), "{} did not parse: {:?}", src, back);
        prop_assert_eq!(back.unwrap(), e);
    }

    #[test]
    fn printed_trees_evaluate_like_the_tree((e, expected) in arb_arith()) {
        let src = e.to_string();
        prop_assert_eq!(run(&src), Value::Integer(expected), "{}", src);
    }

    #[test]
    fn parser_never_panics(tokens in prop::collection::vec(prop::sample::select(TOKENS), 0..24)) {
        let src = tokens.concat();
        if let Ok(stmt) = parse(&src) {
            let again = stmt.to_string();
            prop_assert_eq!(parse(&again).unwrap(), stmt, "{} reprinted as {}", src, again);
        }
    }

    #[test]
    fn repl_survives_arbitrary_bytes(bytes in prop::collection::vec(any::<u8>(), 0..200)) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run_interactive(&bytes[..], &mut out, &mut err, false);
        prop_assert_eq!(code, 0);
    }
}

// ---- determinism and containers ----

#[test]
fn generation_and_printing_are_deterministic() {
    let sample = |seed| {
        let mut rng = rng(seed);
        (0..50)
            .map(|_| {
                let tower = random_tower(&mut rng);
                print_value(&random_value(&mut rng, &tower))
            })
            .collect::<Vec<_>>()
    };
    assert_eq!(sample(7), sample(7));
    let inputs = ["[a, b] = PolyRing(QQ(),\"a,b\",PolyRing.grad).gens()", "(a-frac(1,3)*b)**3", "[a, b, a*b]"];
    assert_eq!(Transcript::record(inputs), Transcript::record(inputs));
}

#[test]
fn lists_hold_mutated_elements_and_round_trip() {
    let mut rng = rng(15);
    for _ in 0..200 {
        let tower = random_tower(&mut rng);
        let items: Vec<Value> = (0..rng.gen_range(0..5)).map(|_| random_value(&mut rng, &tower)).collect();
        let list = Value::List(items.clone());
        let printed = print_value(&list);
        let inner: Vec<String> = items.iter().map(print_value).collect();
        assert_eq!(printed, format!("[{}]", inner.join(", ")));
        round_trip(&list, &tower.ctx).unwrap();
    }
    assert_eq!(print_value(&run("[frac(2,2), frac(3,6), mod(13,11), 2-2]")), "[1, frac(1,2), mod(2,11), 0]");
}
