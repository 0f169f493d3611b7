use crate::field::Field;
use crate::rational::{rat, Rational};
use crate::unipoly::UniPoly;
use crate::AlgebraError;
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

const TRIAL_BOUND: u64 = 100_000;

/// Writes `n = k² · core` with `core` square-free (see the module notes on
/// the trial-division bound). Returns `(core, k)`; `n` must be nonzero.
pub fn squarefree_core(n: &BigInt) -> (BigInt, BigInt) {
    assert!(!n.is_zero(), "square-free core of zero");
    let sign = if n.is_negative() { -1 } else { 1 };
    let mut m = n.abs();
    let mut core = BigInt::from(sign);
    let mut k = BigInt::one();
    let mut p = 2u64;
    while p <= TRIAL_BOUND {
        let bp = BigInt::from(p);
        if (&bp * &bp) > m {
            break;
        }
        let mut e = 0u32;
        while (&m % &bp).is_zero() {
            m /= &bp;
            e += 1;
        }
        if e > 0 {
            k *= num_traits::pow(bp.clone(), (e / 2) as usize);
            if e % 2 == 1 {
                core *= &bp;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    let r = m.sqrt();
    if &r * &r == m {
        k *= r;
    } else {
        core *= m;
    }
    (core, k)
}

/// An element `base + coeff·√D` of Q(√D) with D a square-free non-square.
///
/// Constants made without a context (`zero()`, `one()`, `from_rational`)
/// carry no radicand and adopt the radicand of whatever they meet.
/// Combining two elements with different radicands panics.
#[derive(Clone, Debug)]
pub struct QuadExt {
    base: Rational,
    coeff: Rational,
    d: BigInt,
}

impl QuadExt {
    /// Builds `base + coeff·√radicand`, normalizing the radicand to its
    /// square-free core.
    pub fn new(base: Rational, coeff: Rational, radicand: &BigInt) -> Result<Self, AlgebraError> {
        if radicand.is_zero() {
            return Err(AlgebraError::BadRadicand(radicand.to_string()));
        }
        let (core, k) = squarefree_core(radicand);
        if core.is_one() {
            return Err(AlgebraError::BadRadicand(radicand.to_string()));
        }
        Ok(QuadExt { base, coeff: coeff * Rational::from_integer(k), d: core })
    }

    /// `√radicand` itself.
    pub fn sqrt_of(radicand: &BigInt) -> Result<Self, AlgebraError> {
        Self::new(Rational::zero(), Rational::one(), radicand)
    }

    pub fn rational(q: Rational) -> Self {
        QuadExt { base: q, coeff: Rational::zero(), d: BigInt::zero() }
    }

    pub fn base(&self) -> &Rational {
        &self.base
    }

    pub fn coeff(&self) -> &Rational {
        &self.coeff
    }

    /// The radicand, or `None` for a context-free rational constant.
    pub fn radicand(&self) -> Option<&BigInt> {
        if self.d.is_zero() {
            None
        } else {
            Some(&self.d)
        }
    }

    pub fn norm(&self) -> Rational {
        let d = Rational::from_integer(self.d.clone());
        &self.base * &self.base - &self.coeff * &self.coeff * d
    }

    fn unify(&self, other: &Self) -> BigInt {
        match (self.d.is_zero(), other.d.is_zero()) {
            (true, _) => other.d.clone(),
            (_, true) => self.d.clone(),
            _ => {
                if self.d != other.d {
                    panic!("{}", AlgebraError::RadicandMismatch(self.d.to_string(), other.d.to_string()));
                }
                self.d.clone()
            }
        }
    }

    pub fn compatible(&self, other: &Self) -> Result<(), AlgebraError> {
        if !self.d.is_zero() && !other.d.is_zero() && self.d != other.d {
            return Err(AlgebraError::RadicandMismatch(self.d.to_string(), other.d.to_string()));
        }
        Ok(())
    }
}

impl PartialEq for QuadExt {
    fn eq(&self, other: &Self) -> bool {
        self.base == other.base
            && self.coeff == other.coeff
            && (self.coeff.is_zero() || self.d == other.d)
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeff.is_zero() {
            write!(f, "{}", self.base)
        } else {
            write!(f, "{} + {}*sqrt({})", self.base, self.coeff, self.d)
        }
    }
}

impl Add<&QuadExt> for QuadExt {
    type Output = QuadExt;
    fn add(self, o: &QuadExt) -> QuadExt {
        let d = self.unify(o);
        QuadExt { base: self.base + &o.base, coeff: self.coeff + &o.coeff, d }
    }
}

impl Sub<&QuadExt> for QuadExt {
    type Output = QuadExt;
    fn sub(self, o: &QuadExt) -> QuadExt {
        let d = self.unify(o);
        QuadExt { base: self.base - &o.base, coeff: self.coeff - &o.coeff, d }
    }
}

impl Mul<&QuadExt> for QuadExt {
    type Output = QuadExt;
    fn mul(self, o: &QuadExt) -> QuadExt {
        let d = self.unify(o);
        let dq = Rational::from_integer(d.clone());
        let base = &self.base * &o.base + &self.coeff * &o.coeff * dq;
        let coeff = &self.base * &o.coeff + &self.coeff * &o.base;
        QuadExt { base, coeff, d }
    }
}

impl Div<&QuadExt> for QuadExt {
    type Output = QuadExt;
    fn div(self, o: &QuadExt) -> QuadExt {
        self * &o.inv()
    }
}

macro_rules! by_value {
    ($tr:ident, $m:ident) => {
        impl $tr<QuadExt> for QuadExt {
            type Output = QuadExt;
            fn $m(self, o: QuadExt) -> QuadExt {
                $tr::$m(self, &o)
            }
        }
    };
}
by_value!(Add, add);
by_value!(Sub, sub);
by_value!(Mul, mul);
by_value!(Div, div);

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt { base: -self.base, coeff: -self.coeff, d: self.d }
    }
}

impl Zero for QuadExt {
    fn zero() -> Self {
        QuadExt::rational(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.base.is_zero() && self.coeff.is_zero()
    }
}

impl One for QuadExt {
    fn one() -> Self {
        QuadExt::rational(Rational::one())
    }
}

impl Field for QuadExt {
    fn from_rational(q: Rational) -> Self {
        QuadExt::rational(q)
    }
    fn inv(&self) -> Self {
        let n = self.norm();
        assert!(!n.is_zero(), "division by zero in Q(sqrt D)");
        QuadExt { base: &self.base / &n, coeff: -(&self.coeff / &n), d: self.d.clone() }
    }
    fn conj(&self) -> Self {
        QuadExt { base: self.base.clone(), coeff: -self.coeff.clone(), d: self.d.clone() }
    }
    fn to_rational(&self) -> Option<Rational> {
        if self.coeff.is_zero() {
            Some(self.base.clone())
        } else {
            None
        }
    }
    fn roots_in_field(p: &UniPoly<Self>) -> Vec<Self> {
        crate::roots::quadratic_field_roots(p)
    }
}

impl QuadExt {
    /// Small integer convenience for tests and examples.
    pub fn from_parts(base: i64, coeff: i64, radicand: i64) -> Self {
        QuadExt::new(rat(base), rat(coeff), &BigInt::from(radicand)).expect("valid radicand")
    }

    /// The radicand as `i64` when it fits.
    pub fn radicand_i64(&self) -> Option<i64> {
        self.radicand().and_then(|d| d.to_i64())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn core_strips_squares() {
        let (c, k) = squarefree_core(&BigInt::from(170061120));
        assert_eq!(c, BigInt::from(5));
        assert_eq!(&k * &k * &c, BigInt::from(170061120));
        let (c, k) = squarefree_core(&BigInt::from(-72));
        assert_eq!((c, k), (BigInt::from(-2), BigInt::from(6)));
        let big = BigInt::from(1_000_003u64) * BigInt::from(1_000_003u64) * 7;
        assert_eq!(squarefree_core(&big).0, BigInt::from(7));
    }

    #[test]
    fn golden_product() {
        let delta = QuadExt::from_parts(-4374, -2916, 5);
        let zeta = QuadExt::from_parts(-6, 4, 5);
        let p = delta * &zeta;
        assert_eq!(p, QuadExt::rational(rat(-32076)));
    }

    #[test]
    fn radicand_normalized() {
        let a = QuadExt::from_parts(0, 1, 20);
        assert_eq!(a.radicand_i64(), Some(5));
        assert_eq!(a.coeff(), &rat(2));
        assert!(QuadExt::new(rat(1), rat(1), &BigInt::from(49)).is_err());
    }

    #[test]
    #[should_panic(expected = "radicands differ")]
    fn mixed_radicands_panic() {
        let _ = QuadExt::from_parts(0, 1, 2) + &QuadExt::from_parts(0, 1, 3);
    }

    #[test]
    fn inverse_and_conjugate() {
        let a = QuadExt::from_parts(3, 2, 7);
        assert_eq!(a.clone() * &a.inv(), QuadExt::one());
        assert_eq!(a.conj().conj(), a);
        let n = a.clone() * &a.conj();
        assert_eq!(n.to_rational(), Some(rat(9 - 28)));
    }
}
