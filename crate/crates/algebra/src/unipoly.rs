//! Dense univariate polynomials, lowest degree first.

use crate::field::Field;
use crate::rational::Rational;
use crate::AlgebraError;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Degree at or below which [`resultant`] uses the Sylvester determinant.
pub const SYLVESTER_MAX_DEGREE: usize = 8;

#[derive(Clone, Debug, PartialEq)]
pub struct UniPoly<F> {
    coeffs: Vec<F>,
}

impl<F: Field> UniPoly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Self::new(vec![c])
    }

    /// The variable itself.
    pub fn x() -> Self {
        Self::new(vec![F::zero(), F::one()])
    }

    pub fn monomial(c: F, n: usize) -> Self {
        let mut v = vec![F::zero(); n];
        v.push(c);
        Self::new(v)
    }

    /// `x − r`.
    pub fn linear_root(r: F) -> Self {
        Self::new(vec![-r, F::one()])
    }

    pub fn from_i64(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| F::from_i64(c)).collect())
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0; only for bounds.
    pub fn deg0(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn coeff(&self, i: usize) -> F {
        self.coeffs.get(i).cloned().unwrap_or_else(F::zero)
    }

    pub fn lc(&self) -> F {
        self.coeffs.last().cloned().unwrap_or_else(F::zero)
    }

    pub fn eval(&self, x: &F) -> F {
        let mut acc = F::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        UniPoly { coeffs: self.coeffs.iter().map(|a| a.clone() * c).collect() }
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let inv = self.lc().inv();
        self.scale(&inv)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * &F::from_i64(i as i64))
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// `self(other(x))`.
    pub fn compose(&self, other: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * other) + &Self::constant(c.clone());
        }
        acc
    }

    /// `self(x + c)`.
    pub fn shift(&self, c: &F) -> Self {
        self.compose(&Self::new(vec![c.clone(), F::one()]))
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> UniPoly<G> {
        UniPoly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn conj(&self) -> Self {
        self.map(|c| c.conj())
    }

    /// Coefficients as rationals, when they all lie in Q.
    pub fn to_rational(&self) -> Option<UniPoly<Rational>> {
        let cs: Option<Vec<Rational>> = self.coeffs.iter().map(|c| c.to_rational()).collect();
        cs.map(UniPoly::new)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by the zero polynomial");
        let inv = d.lc().inv();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![F::zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = r[i + dd].clone() * &inv;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[i + j] = r[i + j].clone() - &(c.clone() * dc);
                }
            }
            q[i] = c;
        }
        r.truncate(dd);
        (Self::new(q), Self::new(r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.divrem(d).1
    }

    /// Quotient when `d` divides `self` exactly.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.divrem(d);
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.rem(self).is_zero()
    }

    /// Multiplicity of `p` (nonconstant) as a factor of `self` (nonzero).
    pub fn valuation(&self, p: &Self) -> usize {
        let mut n = 0;
        let mut cur = self.clone();
        while let Some(q) = cur.exact_div(p) {
            n += 1;
            cur = q;
        }
        n
    }

    /// Order of vanishing at 0.
    pub fn ord0(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }
}

impl<F: Field> Add for &UniPoly<F> {
    type Output = UniPoly<F>;
    fn add(self, o: &UniPoly<F>) -> UniPoly<F> {
        let n = self.coeffs.len().max(o.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) + &o.coeff(i)).collect())
    }
}

impl<F: Field> Sub for &UniPoly<F> {
    type Output = UniPoly<F>;
    fn sub(self, o: &UniPoly<F>) -> UniPoly<F> {
        let n = self.coeffs.len().max(o.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) - &o.coeff(i)).collect())
    }
}

impl<F: Field> Mul for &UniPoly<F> {
    type Output = UniPoly<F>;
    fn mul(self, o: &UniPoly<F>) -> UniPoly<F> {
        if self.is_zero() || o.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + &(a.clone() * b);
            }
        }
        UniPoly::new(out)
    }
}

impl<F: Field> Neg for &UniPoly<F> {
    type Output = UniPoly<F>;
    fn neg(self) -> UniPoly<F> {
        UniPoly { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl<F: Field> $tr for UniPoly<F> {
            type Output = UniPoly<F>;
            fn $m(self, o: UniPoly<F>) -> UniPoly<F> {
                $tr::$m(&self, &o)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl<F: Field> Neg for UniPoly<F> {
    type Output = UniPoly<F>;
    fn neg(self) -> UniPoly<F> {
        -&self
    }
}

impl<F: Field> fmt::Display for UniPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Monic gcd; `gcd(0, 0) = 0`.
pub fn poly_gcd<F: Field>(p: &UniPoly<F>, q: &UniPoly<F>) -> UniPoly<F> {
    let mut a = p.clone();
    let mut b = q.clone();
    while !b.is_zero() {
        let r = a.rem(&b);
        a = b;
        b = r;
    }
    a.monic()
}

/// Yun's algorithm. Factors are monic, squarefree, pairwise coprime, and
/// listed by strictly increasing multiplicity.
pub fn squarefree_decompose<F: Field>(p: &UniPoly<F>) -> Result<Vec<(UniPoly<F>, usize)>, AlgebraError> {
    if p.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    let mut out = Vec::new();
    if p.deg0() == 0 {
        return Ok(out);
    }
    let p = p.monic();
    let dp = p.derivative();
    let a0 = poly_gcd(&p, &dp);
    let mut b = p.exact_div(&a0).expect("gcd divides");
    let mut c = dp.exact_div(&a0).expect("gcd divides");
    let mut d = &c - &b.derivative();
    let mut i = 1;
    loop {
        let a = poly_gcd(&b, &d);
        if a.deg0() > 0 {
            out.push((a.clone(), i));
        }
        b = b.exact_div(&a).expect("gcd divides");
        if b.deg0() == 0 {
            break;
        }
        c = d.exact_div(&a).expect("gcd divides");
        d = &c - &b.derivative();
        i += 1;
    }
    Ok(out)
}

/// Product of the distinct monic irreducible factors (the radical).
pub fn squarefree_part<F: Field>(p: &UniPoly<F>) -> UniPoly<F> {
    if p.deg0() == 0 {
        return UniPoly::one();
    }
    p.exact_div(&poly_gcd(p, &p.derivative())).expect("gcd divides").monic()
}

/// Pairwise coprime monic polynomials that multiplicatively span the
/// inputs; each divides at least one input. Constants are ignored and
/// non-squarefree inputs are replaced by their radicals.
pub fn gcd_free_basis<F: Field>(inputs: &[UniPoly<F>]) -> Vec<UniPoly<F>> {
    let mut basis: Vec<UniPoly<F>> = Vec::new();
    for p in inputs {
        if p.is_zero() {
            continue;
        }
        let mut a = squarefree_part(p);
        let mut next = Vec::with_capacity(basis.len() + 2);
        for b in basis.drain(..) {
            if a.deg0() == 0 {
                next.push(b);
                continue;
            }
            let g = poly_gcd(&a, &b);
            if g.deg0() == 0 {
                next.push(b);
                continue;
            }
            let bq = b.exact_div(&g).expect("gcd divides");
            if bq.deg0() > 0 {
                next.push(bq.monic());
            }
            a = a.exact_div(&g).expect("gcd divides");
            next.push(g);
        }
        if a.deg0() > 0 {
            next.push(a.monic());
        }
        basis = next;
    }
    sort_polys(&mut basis);
    basis
}

/// Deterministic order: by degree, then by coefficient display strings.
pub fn sort_polys<F: Field>(v: &mut [UniPoly<F>]) {
    v.sort_by_cached_key(|p| {
        (p.deg0(), p.coeffs.iter().rev().map(|c| c.to_string()).collect::<Vec<_>>())
    });
}

/// Determinant by Gaussian elimination over the field.
pub fn determinant<F: Field>(mut m: Vec<Vec<F>>) -> F {
    let n = m.len();
    let mut det = F::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return F::zero();
        };
        if piv != col {
            m.swap(piv, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det = det * &p;
        let inv = p.inv();
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].clone() * &inv;
            for c in col..n {
                let v = m[col][c].clone() * &f;
                m[r][c] = m[r][c].clone() - &v;
            }
        }
    }
    det
}

pub fn sylvester_matrix<F: Field>(p: &UniPoly<F>, q: &UniPoly<F>) -> Vec<Vec<F>> {
    let m = p.deg0();
    let n = q.deg0();
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![F::zero(); size];
        for (j, c) in p.coeffs.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![F::zero(); size];
        for (j, c) in q.coeffs.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    rows
}

/// Resultant as the Sylvester determinant.
pub fn resultant_sylvester<F: Field>(p: &UniPoly<F>, q: &UniPoly<F>) -> F {
    if p.is_zero() || q.is_zero() {
        return F::zero();
    }
    if p.deg0() == 0 && q.deg0() == 0 {
        return F::one();
    }
    determinant(sylvester_matrix(p, q))
}

/// `Res_{m,n}(p, q)`: the Sylvester determinant with `p` read as a polynomial
/// of formal degree `m` and `q` of formal degree `n`, so vanishing leading
/// coefficients are kept rather than dropped.
pub fn resultant_formal<F: Field>(p: &UniPoly<F>, m: usize, q: &UniPoly<F>, n: usize) -> Result<F, AlgebraError> {
    for (f, d) in [(p, m), (q, n)] {
        if !f.is_zero() && f.deg0() > d {
            return Err(AlgebraError::DegreeExceedsBound { degree: f.deg0(), bound: d });
        }
    }
    if m + n == 0 {
        return Ok(F::one());
    }
    let coeff = |f: &UniPoly<F>, i: usize| f.coeffs.get(i).cloned().unwrap_or_else(F::zero);
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for (f, d, copies) in [(p, m, n), (q, n, m)] {
        for i in 0..copies {
            let mut row = vec![F::zero(); size];
            for j in 0..=d {
                row[i + j] = coeff(f, d - j);
            }
            rows.push(row);
        }
    }
    Ok(determinant(rows))
}

/// Resultant by the subresultant polynomial remainder sequence.
pub fn resultant_subresultant<F: Field>(p: &UniPoly<F>, q: &UniPoly<F>) -> F {
    if p.is_zero() || q.is_zero() {
        return F::zero();
    }
    let (mut a, mut b) = (p.clone(), q.clone());
    let mut s = F::one();
    if a.deg0() < b.deg0() {
        std::mem::swap(&mut a, &mut b);
        if a.deg0() % 2 == 1 && b.deg0() % 2 == 1 {
            s = -s;
        }
    }
    if b.deg0() == 0 {
        return s * &b.lc().powu(a.deg0() as u32);
    }
    let mut g = F::one();
    let mut h = F::one();
    loop {
        let da = a.deg0();
        let db = b.deg0();
        let delta = (da - db) as u32;
        if da % 2 == 1 && db % 2 == 1 {
            s = -s;
        }
        let r = pseudo_rem(&a, &b);
        a = b;
        let denom = g.clone() * &h.powu(delta);
        b = r.scale(&denom.inv());
        g = a.lc();
        h = if delta == 0 {
            h
        } else {
            g.powu(delta) / &h.powu(delta - 1)
        };
        if b.is_zero() {
            return F::zero();
        }
        if b.deg0() == 0 {
            let da = a.deg0() as u32;
            let hh = b.lc().powu(da) / &h.powu(da.saturating_sub(1));
            let hh = if da == 0 { hh * &h } else { hh };
            return s * &hh;
        }
    }
}

fn pseudo_rem<F: Field>(a: &UniPoly<F>, b: &UniPoly<F>) -> UniPoly<F> {
    let delta = (a.deg0() - b.deg0()) as u32;
    a.scale(&b.lc().powu(delta + 1)).rem(b)
}

/// Sylvester determinant up to [`SYLVESTER_MAX_DEGREE`], subresultant PRS above.
pub fn resultant<F: Field>(p: &UniPoly<F>, q: &UniPoly<F>) -> F {
    if p.deg0().max(q.deg0()) <= SYLVESTER_MAX_DEGREE {
        resultant_sylvester(p, q)
    } else {
        resultant_subresultant(p, q)
    }
}

/// `Disc(p) = (−1)^{n(n−1)/2} Res(p, p′) / lc(p)`.
pub fn discriminant<F: Field>(p: &UniPoly<F>) -> Result<F, AlgebraError> {
    let n = match p.degree() {
        None => return Err(AlgebraError::ZeroPolynomial),
        Some(0) => return Err(AlgebraError::ConstantDiscriminant),
        Some(n) => n,
    };
    let r = resultant(p, &p.derivative()) / &p.lc();
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -r } else { r })
}

/// `uⁿ · p(1/u)`.
pub fn reciprocal_homogenize<F: Field>(p: &UniPoly<F>, n: usize) -> Result<UniPoly<F>, AlgebraError> {
    let d = p.deg0();
    if !p.is_zero() && d > n {
        return Err(AlgebraError::DegreeExceedsBound { degree: d, bound: n });
    }
    let mut v = vec![F::zero(); n + 1];
    for (i, c) in p.coeffs.iter().enumerate() {
        v[n - i] = c.clone();
    }
    Ok(UniPoly::new(v))
}

/// Lagrange interpolation through `(xs[i], ys[i])` with distinct `xs`.
pub fn interpolate<F: Field>(xs: &[F], ys: &[F]) -> UniPoly<F> {
    let mut acc = UniPoly::zero();
    for (i, (xi, yi)) in xs.iter().zip(ys).enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut basis = UniPoly::constant(yi.clone());
        for (j, xj) in xs.iter().enumerate() {
            if i != j {
                let inv = (xi.clone() - xj).inv();
                basis = &basis * &UniPoly::new(vec![-(xj.clone() * &inv), inv]);
            }
        }
        acc = &acc + &basis;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    type P = UniPoly<Rational>;

    #[test]
    fn gcd_examples() {
        let p = P::from_i64(&[-1, 0, 1]);
        let q = P::from_i64(&[-1, 1]);
        assert_eq!(poly_gcd(&p, &q), q);
        let p2 = P::from_i64(&[4, 0, 2]);
        assert_eq!(poly_gcd(&p2, &P::zero()), P::from_i64(&[2, 0, 1]));
        assert!(poly_gcd(&P::zero(), &P::zero()).is_zero());
    }

    #[test]
    fn squarefree_example() {
        // x³(x−1)²
        let x = P::x();
        let xm1 = P::from_i64(&[-1, 1]);
        let p = &x.pow(3) * &xm1.pow(2);
        let d = squarefree_decompose(&p).unwrap();
        assert_eq!(d, vec![(xm1, 2), (x, 3)]);
        assert!(squarefree_decompose(&P::zero()).is_err());
        let sq = P::from_i64(&[1, 0, 3]);
        assert_eq!(squarefree_decompose(&sq).unwrap(), vec![(sq.monic(), 1)]);
    }

    #[test]
    fn gcd_free_example() {
        let a = P::from_i64(&[0, -1, 1]);
        let b = P::from_i64(&[2, -3, 1]);
        let basis = gcd_free_basis(&[a, b]);
        assert_eq!(basis, vec![P::from_i64(&[-1, 1]), P::from_i64(&[-2, 1]), P::x()]);
    }

    #[test]
    fn resultant_examples() {
        let p = P::from_i64(&[-2, 1]);
        let q = P::from_i64(&[-3, 1]);
        assert_eq!(resultant(&p, &q), rat(-1));
        assert_eq!(resultant_subresultant(&p, &q), rat(-1));
        // Disc(x² + 5x + 7) = 25 − 28
        assert_eq!(discriminant(&P::from_i64(&[7, 5, 1])).unwrap(), rat(-3));
        assert!(discriminant(&P::from_i64(&[3])).is_err());
    }

    #[test]
    fn subresultant_matches_sylvester_on_fixed_inputs() {
        let p = P::from_i64(&[3, -1, 4, 1, -5, 9, 2]);
        let q = P::from_i64(&[6, 5, -3, 5, 8]);
        assert_eq!(resultant_sylvester(&p, &q), resultant_subresultant(&p, &q));
        assert_eq!(resultant_sylvester(&q, &p), resultant_subresultant(&q, &p));
        let c = P::from_i64(&[7]);
        assert_eq!(resultant_subresultant(&p, &c), rat(7).pow(6));
        assert_eq!(resultant_sylvester(&p, &c), rat(7).pow(6));
    }

    #[test]
    fn formal_resultant_keeps_vanishing_leading_coefficients() {
        let p = P::from_i64(&[3, -1, 4]);
        let q = P::from_i64(&[6, 5, -3, 1]);
        assert_eq!(resultant_formal(&p, 2, &q, 3).unwrap(), resultant_sylvester(&p, &q));
        // Degree 1 read as degree 2 against a monic cubic: one factor of (−1)³.
        let l = P::from_i64(&[3, -1]);
        assert_eq!(resultant_formal(&l, 2, &q, 3).unwrap(), -resultant_sylvester(&l, &q));
        let c = P::from_i64(&[7]);
        assert_eq!(resultant_formal(&c, 2, &q, 3).unwrap(), rat(7).pow(3));
        assert!(resultant_formal(&q, 2, &p, 3).is_err());
    }

    #[test]
    fn reciprocal_examples() {
        let p = P::from_i64(&[1, 0, 1]);
        assert_eq!(reciprocal_homogenize(&p, 4).unwrap(), P::from_i64(&[0, 0, 1, 0, 1]));
        assert_eq!(reciprocal_homogenize(&P::from_i64(&[5]), 3).unwrap(), P::from_i64(&[0, 0, 0, 5]));
        assert!(reciprocal_homogenize(&p, 1).is_err());
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let p = P::from_i64(&[3, 0, -2, 1]);
        let xs: Vec<Rational> = (0..4).map(rat).collect();
        let ys: Vec<Rational> = xs.iter().map(|x| p.eval(x)).collect();
        assert_eq!(interpolate(&xs, &ys), p);
    }
}
