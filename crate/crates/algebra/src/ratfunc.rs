//! Multivariate rational functions kept as unreduced fractions.

use crate::field::Field;
use crate::multipoly::MultiPoly;
use crate::rational::Rational;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// `num / den` with `den` nonzero. No gcd is taken; equality is tested by
/// cross-multiplication.
#[derive(Clone, Debug)]
pub struct RatFunc<F = Rational> {
    pub num: MultiPoly<F>,
    pub den: MultiPoly<F>,
}

impl<F: Field> RatFunc<F> {
    pub fn new(num: MultiPoly<F>, den: MultiPoly<F>) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        RatFunc { num, den }
    }

    pub fn poly(p: MultiPoly<F>) -> Self {
        let n = p.nvars();
        RatFunc { num: p, den: MultiPoly::one(n) }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::poly(MultiPoly::var(nvars, i))
    }

    pub fn constant(nvars: usize, c: F) -> Self {
        Self::poly(MultiPoly::constant(nvars, c))
    }

    pub fn pow(&self, e: u32) -> Self {
        RatFunc { num: self.num.pow(e), den: self.den.pow(e) }
    }

    pub fn scale(&self, c: &F) -> Self {
        RatFunc { num: self.num.scale(c), den: self.den.clone() }
    }

    /// Evaluates the polynomial `p` at rational-function arguments over the
    /// common denominator `Π den_i^(deg_i p)`.
    pub fn substitute(p: &MultiPoly<F>, args: &[RatFunc<F>]) -> Self {
        assert_eq!(args.len(), p.nvars(), "substitution arity");
        let m = args.first().map_or(0, |a| a.num.nvars());
        let degs: Vec<u32> = (0..args.len()).map(|i| p.degree_in(i).unwrap_or(0)).collect();
        let pw = |q: &MultiPoly<F>, k: u32| if k == 0 { MultiPoly::one(m) } else { q.pow(k) };
        let mut num = MultiPoly::zero(m);
        for (e, c) in p.terms() {
            let mut t = MultiPoly::constant(m, c.clone());
            for (i, a) in args.iter().enumerate() {
                t = &(&t * &pw(&a.num, e[i])) * &pw(&a.den, degs[i] - e[i]);
            }
            num = &num + &t;
        }
        let den = args.iter().zip(&degs).fold(MultiPoly::one(m), |acc, (a, &k)| &acc * &pw(&a.den, k));
        RatFunc::new(num, den)
    }

    /// `self == other` as functions on the hypersurface `var² = rhs`.
    pub fn equal_mod_square(&self, other: &Self, var: usize, rhs: &MultiPoly<F>) -> bool {
        let diff = &(&self.num * &other.den) - &(&other.num * &self.den);
        diff.reduce_square(var, rhs).is_zero()
    }

    pub fn equal(&self, other: &Self) -> bool {
        (&(&self.num * &other.den) - &(&other.num * &self.den)).is_zero()
    }
}

impl<F: Field> Add for &RatFunc<F> {
    type Output = RatFunc<F>;
    fn add(self, o: &RatFunc<F>) -> RatFunc<F> {
        if self.den == o.den {
            return RatFunc { num: &self.num + &o.num, den: self.den.clone() };
        }
        RatFunc { num: &(&self.num * &o.den) + &(&o.num * &self.den), den: &self.den * &o.den }
    }
}

impl<F: Field> Sub for &RatFunc<F> {
    type Output = RatFunc<F>;
    fn sub(self, o: &RatFunc<F>) -> RatFunc<F> {
        self + &(-o)
    }
}

impl<F: Field> Mul for &RatFunc<F> {
    type Output = RatFunc<F>;
    fn mul(self, o: &RatFunc<F>) -> RatFunc<F> {
        RatFunc { num: &self.num * &o.num, den: &self.den * &o.den }
    }
}

impl<F: Field> Div for &RatFunc<F> {
    type Output = RatFunc<F>;
    fn div(self, o: &RatFunc<F>) -> RatFunc<F> {
        RatFunc::new(&self.num * &o.den, &self.den * &o.num)
    }
}

impl<F: Field> Neg for &RatFunc<F> {
    type Output = RatFunc<F>;
    fn neg(self) -> RatFunc<F> {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fractions_add_and_compare() {
        let x = RatFunc::<Rational>::var(2, 0);
        let y = RatFunc::<Rational>::var(2, 1);
        let lhs = &(&x / &y) + &(&y / &x);
        let rhs = RatFunc::new(&x.num.pow(2) + &y.num.pow(2), &x.num * &y.num);
        assert!(lhs.equal(&rhs));
        assert!(!lhs.equal(&x));
    }

    #[test]
    fn modulo_a_square() {
        // On y² = x: y²/x = 1.
        let x = RatFunc::<Rational>::var(2, 0);
        let y = RatFunc::<Rational>::var(2, 1);
        let one = RatFunc::constant(2, Rational::from_integer(1.into()));
        assert!((&y.pow(2) / &x).equal_mod_square(&one, 1, &x.num));
    }
}
