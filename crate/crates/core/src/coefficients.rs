//! Base coefficient rings: integers, reduced rationals and residues modulo `m`.
//!
//! Integers are a single arbitrary-precision type; there is no separate
//! machine-word representation, so small and large values share one syntax.
//! A rational whose reduced denominator is 1 is never constructed: the
//! constructors hand back an [`Integer`] instead.

use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Integer = BigInt;

/// The ring contract shared by the base coefficient types.
pub trait RingElement: Clone + PartialEq + Sized {
    fn add(&self, other: &Self) -> Result<Self>;
    fn sub(&self, other: &Self) -> Result<Self>;
    fn mul(&self, other: &Self) -> Result<Self>;
    fn neg(&self) -> Self;
    fn is_zero_element(&self) -> bool;
    /// The multiplicative identity of the ring `self` lives in.
    fn one_like(&self) -> Self;

    fn pow(&self, exp: &BigUint) -> Result<Self> {
        pow_by_squaring(self.one_like(), self, exp, |a, b| a.mul(b))
    }
}

/// Square-and-multiply over the bits of `exp`, most significant first.
pub(crate) fn pow_by_squaring<T: Clone>(
    one: T,
    base: &T,
    exp: &BigUint,
    mut mul: impl FnMut(&T, &T) -> Result<T>,
) -> Result<T> {
    let mut acc = one;
    for i in (0..exp.bits()).rev() {
        acc = mul(&acc, &acc)?;
        if exp.bit(i) {
            acc = mul(&acc, base)?;
        }
    }
    Ok(acc)
}

impl RingElement for Integer {
    fn add(&self, other: &Self) -> Result<Self> {
        Ok(self + other)
    }
    fn sub(&self, other: &Self) -> Result<Self> {
        Ok(self - other)
    }
    fn mul(&self, other: &Self) -> Result<Self> {
        Ok(self * other)
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero_element(&self) -> bool {
        Zero::is_zero(self)
    }
    fn one_like(&self) -> Self {
        BigInt::one()
    }
    fn pow(&self, exp: &BigUint) -> Result<Self> {
        Ok(num_traits::Pow::pow(self, exp))
    }
}

/// A fraction in lowest terms with denominator greater than 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rational {
    numer: Integer,
    denom: Integer,
}

impl Rational {
    pub fn numer(&self) -> &Integer {
        &self.numer
    }

    pub fn denom(&self) -> &Integer {
        &self.denom
    }

    pub fn is_negative(&self) -> bool {
        self.numer.is_negative()
    }

    fn assert_invariants(&self) {
        debug_assert!(self.denom > BigInt::one());
        debug_assert!(self.numer.gcd(&self.denom).is_one());
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "frac({},{})", self.numer, self.denom)
    }
}

/// An element of QQ: either an integer or a proper fraction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Quotient {
    Integer(Integer),
    Rational(Rational),
}

/// Builds `n/d` in lowest terms, mutating to an integer when the reduced
/// denominator is 1.
pub fn rat_make(n: Integer, d: Integer) -> Result<Quotient> {
    if Zero::is_zero(&d) {
        return Err(Error::ZeroDenominator);
    }
    let g = n.gcd(&d);
    let (mut numer, mut denom) = (n / &g, d / &g);
    if denom.is_negative() {
        numer = -numer;
        denom = -denom;
    }
    if denom.is_one() {
        return Ok(Quotient::Integer(numer));
    }
    let r = Rational { numer, denom };
    r.assert_invariants();
    Ok(Quotient::Rational(r))
}

impl Quotient {
    pub fn parts(&self) -> (Integer, Integer) {
        match self {
            Quotient::Integer(n) => (n.clone(), BigInt::one()),
            Quotient::Rational(r) => (r.numer.clone(), r.denom.clone()),
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Quotient::Integer(n) => n.is_negative(),
            Quotient::Rational(r) => r.is_negative(),
        }
    }

    pub fn abs(&self) -> Quotient {
        if self.is_negative() {
            RingElement::neg(self)
        } else {
            self.clone()
        }
    }

    fn combine(&self, other: &Self, f: impl Fn(Integer, Integer, Integer, Integer) -> (Integer, Integer)) -> Self {
        let (n1, d1) = self.parts();
        let (n2, d2) = other.parts();
        let (n, d) = f(n1, d1, n2, d2);
        rat_make(n, d).expect("denominators of normalized rationals are nonzero")
    }
}

impl RingElement for Quotient {
    fn add(&self, other: &Self) -> Result<Self> {
        Ok(self.combine(other, |n1, d1, n2, d2| (n1 * &d2 + n2 * &d1, d1 * d2)))
    }
    fn sub(&self, other: &Self) -> Result<Self> {
        Ok(self.combine(other, |n1, d1, n2, d2| (n1 * &d2 - n2 * &d1, d1 * d2)))
    }
    fn mul(&self, other: &Self) -> Result<Self> {
        Ok(self.combine(other, |n1, d1, n2, d2| (n1 * n2, d1 * d2)))
    }
    fn neg(&self) -> Self {
        match self {
            Quotient::Integer(n) => Quotient::Integer(-n),
            Quotient::Rational(r) => Quotient::Rational(Rational {
                numer: -&r.numer,
                denom: r.denom.clone(),
            }),
        }
    }
    fn is_zero_element(&self) -> bool {
        matches!(self, Quotient::Integer(n) if Zero::is_zero(n))
    }
    fn one_like(&self) -> Self {
        Quotient::Integer(BigInt::one())
    }
    fn pow(&self, exp: &BigUint) -> Result<Self> {
        let (n, d) = self.parts();
        rat_make(num_traits::Pow::pow(&n, exp), num_traits::Pow::pow(&d, exp))
    }
}

/// A residue class modulo `modulus`, stored as its representative in
/// `[0, modulus)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModInt {
    residue: Integer,
    modulus: Integer,
}

pub fn mod_make(value: Integer, modulus: Integer) -> Result<ModInt> {
    if modulus < BigInt::from(2) {
        return Err(Error::BadModulus(modulus));
    }
    let residue = value.mod_floor(&modulus);
    Ok(ModInt { residue, modulus })
}

impl ModInt {
    pub fn residue(&self) -> &Integer {
        &self.residue
    }

    pub fn modulus(&self) -> &Integer {
        &self.modulus
    }

    pub fn is_one(&self) -> bool {
        self.residue.is_one()
    }

    fn check_modulus(&self, other: &Self) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch(self.modulus.clone(), other.modulus.clone()));
        }
        Ok(())
    }

    fn reduce(&self, value: Integer) -> ModInt {
        ModInt {
            residue: value.mod_floor(&self.modulus),
            modulus: self.modulus.clone(),
        }
    }
}

impl fmt::Display for ModInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "mod({},{})", self.residue, self.modulus)
    }
}

impl RingElement for ModInt {
    fn add(&self, other: &Self) -> Result<Self> {
        self.check_modulus(other)?;
        Ok(self.reduce(&self.residue + &other.residue))
    }
    fn sub(&self, other: &Self) -> Result<Self> {
        self.check_modulus(other)?;
        Ok(self.reduce(&self.residue - &other.residue))
    }
    fn mul(&self, other: &Self) -> Result<Self> {
        self.check_modulus(other)?;
        Ok(self.reduce(&self.residue * &other.residue))
    }
    fn neg(&self) -> Self {
        self.reduce(-&self.residue)
    }
    fn is_zero_element(&self) -> bool {
        Zero::is_zero(&self.residue)
    }
    fn one_like(&self) -> Self {
        self.reduce(BigInt::one())
    }
    fn pow(&self, exp: &BigUint) -> Result<Self> {
        let e = BigInt::from_biguint(Sign::Plus, exp.clone());
        Ok(ModInt {
            residue: self.residue.modpow(&e, &self.modulus),
            modulus: self.modulus.clone(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i64) -> Integer {
        BigInt::from(n)
    }

    fn q(n: i64, d: i64) -> Quotient {
        rat_make(int(n), int(d)).unwrap()
    }

    #[test]
    fn integer_small_cases() {
        assert_eq!(RingElement::add(&int(1), &int(1)).unwrap(), int(2));
        assert_eq!(RingElement::mul(&int(2), &int(0)).unwrap(), int(0));
    }

    #[test]
    fn repeated_doubling_does_not_wrap() {
        // oracle: the same doubling in u64
        let mut oracle: u64 = 1;
        let mut acc = int(1);
        for _ in 0..40 {
            oracle *= 2;
            acc = RingElement::mul(&acc, &int(2)).unwrap();
        }
        assert_eq!(oracle, 1_099_511_627_776);
        assert_eq!(acc, BigInt::from(oracle));
        assert_eq!(RingElement::pow(&int(2), &BigUint::from(40u32)).unwrap(), acc);
    }

    #[test]
    fn rat_make_reduces_and_mutates() {
        let half = q(1, 2);
        assert_eq!(format!("{}", match &half { Quotient::Rational(r) => r, _ => unreachable!() }), "frac(1,2)");
        assert_eq!(q(2, 4), half);
        assert_eq!(q(4, 2), Quotient::Integer(int(2)));
        assert_eq!(q(3, -6), q(-1, 2));
        assert_eq!(rat_make(int(1), int(0)), Err(Error::ZeroDenominator));
    }

    #[test]
    fn rational_arithmetic() {
        assert_eq!(q(1, 2).add(&q(1, 2)).unwrap(), Quotient::Integer(int(1)));
        // n1*d2 + n2*d1 over d1*d2: 1*3 + 1*2 = 5 over 6, gcd 1
        assert_eq!(q(1, 2).add(&q(1, 3)).unwrap(), q(5, 6));
        // 2*3 over 3*1 = 6/3 = 2
        assert_eq!(q(2, 3).mul(&q(3, 1)).unwrap(), Quotient::Integer(int(2)));
        assert_eq!(q(-2, 3).abs(), q(2, 3));
        assert_eq!(q(2, 3).pow(&BigUint::from(2u32)).unwrap(), q(4, 9));
    }

    #[test]
    fn modint_construction() {
        assert_eq!(mod_make(int(5), int(11)).unwrap().to_string(), "mod(5,11)");
        assert_eq!(mod_make(int(-5), int(11)).unwrap().to_string(), "mod(6,11)");
        assert_eq!(mod_make(int(11), int(11)).unwrap().to_string(), "mod(0,11)");
        assert_eq!(mod_make(int(3), int(1)), Err(Error::BadModulus(int(1))));
        assert_eq!(mod_make(int(3), int(-7)), Err(Error::BadModulus(int(-7))));
    }

    #[test]
    fn modint_arithmetic() {
        let m = |v: i64, n: i64| mod_make(int(v), int(n)).unwrap();
        assert_eq!(m(5, 11).mul(&m(9, 11)).unwrap(), m(1, 11));
        assert_eq!(m(6, 11).add(&m(5, 11)).unwrap(), m(0, 11));
        assert_eq!(
            m(1, 7).add(&m(1, 11)),
            Err(Error::ModulusMismatch(int(7), int(11)))
        );
        assert_eq!(m(3, 11).neg(), m(8, 11));
        assert_eq!(m(2, 11).pow(&BigUint::from(10u32)).unwrap(), m(1, 11));
    }
}
