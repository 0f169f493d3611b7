//! Sparse multivariate polynomials with a fixed number of variables.

use crate::field::Field;
use crate::rational::Rational;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

pub type Exponents = Vec<u32>;

#[derive(Clone, Debug, PartialEq)]
pub struct MultiPoly<F = Rational> {
    nvars: usize,
    terms: BTreeMap<Exponents, F>,
}

impl<F: Field> MultiPoly<F> {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: F) -> Self {
        Self::term(nvars, c, vec![0; nvars])
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, F::one())
    }

    pub fn from_i64(nvars: usize, c: i64) -> Self {
        Self::constant(nvars, F::from_i64(c))
    }

    /// The `i`-th variable.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::term(nvars, F::one(), e)
    }

    pub fn term(nvars: usize, c: F, exps: Exponents) -> Self {
        assert_eq!(exps.len(), nvars, "exponent arity");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        MultiPoly { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &F)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> F {
        self.terms.get(exps).cloned().unwrap_or_else(F::zero)
    }

    fn add_term(&mut self, e: Exponents, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&e) {
            Some(old) => {
                let s = old + &c;
                if !s.is_zero() {
                    self.terms.insert(e, s);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a.clone() * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one(self.nvars);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                out = &out * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        out
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[var]).max()
    }

    /// True when every term has total degree `d`.
    pub fn is_homogeneous(&self, d: u32) -> bool {
        self.terms.keys().all(|e| e.iter().sum::<u32>() == d)
    }

    pub fn eval(&self, point: &[F]) -> F {
        assert_eq!(point.len(), self.nvars, "evaluation arity");
        let mut acc = F::zero();
        for (e, c) in &self.terms {
            let mut v = c.clone();
            for (x, &k) in point.iter().zip(e) {
                if k > 0 {
                    v = v * &x.powu(k);
                }
            }
            acc = acc + &v;
        }
        acc
    }

    /// Substitutes `images[i]` for variable `i`. Images share an arity,
    /// which becomes the arity of the result.
    pub fn compose(&self, images: &[MultiPoly<F>]) -> MultiPoly<F> {
        assert_eq!(images.len(), self.nvars, "substitution arity");
        let m = images.first().map_or(0, |p| p.nvars);
        let mut cache: Vec<Vec<MultiPoly<F>>> = images.iter().map(|p| vec![MultiPoly::one(m), p.clone()]).collect();
        let mut acc = MultiPoly::zero(m);
        for (e, c) in &self.terms {
            let mut t = MultiPoly::constant(m, c.clone());
            for (i, &k) in e.iter().enumerate() {
                let k = k as usize;
                while cache[i].len() <= k {
                    let next = &cache[i][cache[i].len() - 1] * &images[i];
                    cache[i].push(next);
                }
                if k > 0 {
                    t = &t * &cache[i][k];
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Replaces every `var^(2m+r)` by `rhs^m · var^r` (r ∈ {0,1}): the
    /// normal form modulo `var² − rhs` when `rhs` does not involve `var`.
    pub fn reduce_square(&self, var: usize, rhs: &MultiPoly<F>) -> MultiPoly<F> {
        let mut powers = vec![MultiPoly::one(self.nvars)];
        let mut acc = MultiPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            let m = (e[var] / 2) as usize;
            while powers.len() <= m {
                let next = &powers[powers.len() - 1] * rhs;
                powers.push(next);
            }
            let mut e2 = e.clone();
            e2[var] %= 2;
            let t = MultiPoly::term(self.nvars, c.clone(), e2);
            acc = &acc + &(&t * &powers[m]);
        }
        acc
    }

    /// Exact division by a single monomial; `None` if some term is not divisible.
    pub fn div_monomial(&self, exps: &[u32]) -> Option<MultiPoly<F>> {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            if e.iter().zip(exps).any(|(a, b)| a < b) {
                return None;
            }
            terms.insert(e.iter().zip(exps).map(|(a, b)| a - b).collect(), c.clone());
        }
        Some(MultiPoly { nvars: self.nvars, terms })
    }

    /// The polynomial in variable `var` whose coefficients are polynomials
    /// in the remaining variables (arity kept, `var` exponent zero).
    pub fn coefficients_in(&self, var: usize) -> Vec<MultiPoly<F>> {
        let deg = self.degree_in(var).unwrap_or(0) as usize;
        let mut out = vec![MultiPoly::zero(self.nvars); deg + 1];
        for (e, c) in &self.terms {
            let k = e[var] as usize;
            let mut e2 = e.clone();
            e2[var] = 0;
            out[k].add_term(e2, c.clone());
        }
        out
    }

    /// Univariate view when only `var` occurs.
    pub fn to_univariate(&self, var: usize) -> Option<crate::UniPoly<F>> {
        let mut v = vec![F::zero(); self.degree_in(var).unwrap_or(0) as usize + 1];
        for (e, c) in &self.terms {
            if e.iter().enumerate().any(|(i, &k)| i != var && k > 0) {
                return None;
            }
            v[e[var] as usize] = c.clone();
        }
        Some(crate::UniPoly::new(v))
    }

    pub fn from_univariate(p: &crate::UniPoly<F>, nvars: usize, var: usize) -> Self {
        let mut out = Self::zero(nvars);
        for (k, c) in p.coeffs().iter().enumerate() {
            let mut e = vec![0; nvars];
            e[var] = k as u32;
            out.add_term(e, c.clone());
        }
        out
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> MultiPoly<G> {
        let mut out = MultiPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c));
        }
        out
    }
}

impl<F: Field> Add for &MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn add(self, o: &MultiPoly<F>) -> MultiPoly<F> {
        assert_eq!(self.nvars, o.nvars, "arity mismatch");
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl<F: Field> Sub for &MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn sub(self, o: &MultiPoly<F>) -> MultiPoly<F> {
        assert_eq!(self.nvars, o.nvars, "arity mismatch");
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl<F: Field> Mul for &MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn mul(self, o: &MultiPoly<F>) -> MultiPoly<F> {
        assert_eq!(self.nvars, o.nvars, "arity mismatch");
        let mut out = MultiPoly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Exponents = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1.clone() * c2);
            }
        }
        out
    }
}

impl<F: Field> Neg for &MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn neg(self) -> MultiPoly<F> {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect(),
        }
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl<F: Field> $tr for MultiPoly<F> {
            type Output = MultiPoly<F>;
            fn $m(self, o: MultiPoly<F>) -> MultiPoly<F> {
                $tr::$m(&self, &o)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl<F: Field> Neg for MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn neg(self) -> MultiPoly<F> {
        -&self
    }
}

impl<F: Field> fmt::Display for MultiPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (e, c)) in self.terms.iter().rev().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            for (i, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => write!(f, "*v{i}")?,
                    _ => write!(f, "*v{i}^{k}")?,
                }
            }
        }
        Ok(())
    }
}
