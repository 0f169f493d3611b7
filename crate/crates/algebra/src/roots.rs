//! Roots of univariate polynomials that lie in the coefficient field.
//!
//! Over Q: Sturm isolation, then a single candidate `m/L` per interval of
//! width below `1/L`, where `L` is the leading coefficient of the integer
//! scaling (every rational root has a denominator dividing `L`).
//! Over Q(√D): rational roots come from `gcd(C0, C1)` where `C = C0 + √D·C1`;
//! an irrational root `u + v√D` has `2u` among the rational roots of the
//! norm of `Res_x(C(x), C̄(y − x))`, after which `v` is a rational root of
//! the two halves of `C(u + √D·v)`.

use crate::field::Field;
use crate::quadext::QuadExt;
use crate::rational::Rational;
use crate::unipoly::{interpolate, poly_gcd, resultant, squarefree_part, UniPoly};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;

fn sign(q: &Rational) -> Ordering {
    q.cmp(&Rational::zero())
}

fn sturm_sequence(p: &UniPoly<Rational>) -> Vec<UniPoly<Rational>> {
    let mut seq = vec![p.clone(), p.derivative()];
    loop {
        let n = seq.len();
        if seq[n - 1].is_zero() {
            seq.pop();
            break;
        }
        let r = seq[n - 2].rem(&seq[n - 1]);
        if r.is_zero() {
            break;
        }
        seq.push(-r);
    }
    seq
}

fn sign_changes(seq: &[UniPoly<Rational>], x: &Rational) -> usize {
    let mut last = Ordering::Equal;
    let mut n = 0;
    for s in seq {
        let v = sign(&s.eval(x));
        if v == Ordering::Equal {
            continue;
        }
        if last != Ordering::Equal && v != last {
            n += 1;
        }
        last = v;
    }
    n
}

/// Integer-coefficient multiple of `p`.
fn clear_denominators(p: &UniPoly<Rational>) -> Vec<BigInt> {
    let l = p.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    p.coeffs().iter().map(|c| (c * Rational::from_integer(l.clone())).to_integer()).collect()
}

/// Distinct rational roots, sorted ascending.
pub fn rational_roots(p: &UniPoly<Rational>) -> Vec<Rational> {
    let mut roots = Vec::new();
    if p.deg0() == 0 {
        return roots;
    }
    let mut work = squarefree_part(p);
    'restart: loop {
        if work.deg0() == 0 {
            break;
        }
        if work.coeff(0).is_zero() {
            roots.push(Rational::zero());
            work = work.exact_div(&UniPoly::x()).expect("x divides");
            continue;
        }
        if work.deg0() == 1 {
            roots.push(-work.coeff(0) / work.coeff(1));
            break;
        }
        let ints = clear_denominators(&work);
        let lead = ints.last().expect("nonzero").abs();
        let lead_q = Rational::from_integer(lead.clone());
        let width_limit = Rational::new(BigInt::one(), lead.clone());
        let m = ints
            .iter()
            .take(ints.len() - 1)
            .map(|c| Rational::new(c.abs(), lead.clone()))
            .max()
            .unwrap_or_else(Rational::zero)
            + Rational::one();
        let seq = sturm_sequence(&work);
        let mut stack = vec![(-m.clone(), m)];
        let mut found = Vec::new();
        while let Some((a, b)) = stack.pop() {
            let count = sign_changes(&seq, &a) - sign_changes(&seq, &b);
            if count == 0 {
                continue;
            }
            if &b - &a < width_limit {
                let cand = Rational::new((&b * &lead_q).floor().to_integer(), lead.clone());
                if cand > a && work.eval(&cand).is_zero() {
                    found.push(cand);
                }
                continue;
            }
            let mid = (&a + &b) / Rational::from_integer(BigInt::from(2));
            if work.eval(&mid).is_zero() {
                roots.push(mid.clone());
                work = work.exact_div(&UniPoly::linear_root(mid)).expect("root divides");
                continue 'restart;
            }
            stack.push((a, mid.clone()));
            stack.push((mid, b));
        }
        roots.extend(found);
        break;
    }
    roots.sort();
    roots.dedup();
    roots
}

fn radicand_of(p: &UniPoly<QuadExt>) -> Option<BigInt> {
    p.coeffs().iter().find_map(|c| c.radicand().cloned())
}

fn split_halves(p: &UniPoly<QuadExt>) -> (UniPoly<Rational>, UniPoly<Rational>) {
    (p.map(|c| c.base().clone()), p.map(|c| c.coeff().clone()))
}

/// Distinct roots of `p` in Q(√D), where D is the radicand carried by the
/// coefficients. With purely rational coefficients only rational roots are
/// reported, since no extension is in scope.
pub fn quadratic_field_roots(p: &UniPoly<QuadExt>) -> Vec<QuadExt> {
    if p.deg0() == 0 {
        return Vec::new();
    }
    let Some(d) = radicand_of(p) else {
        let rp = p.to_rational().expect("rational coefficients");
        return rational_roots(&rp).into_iter().map(QuadExt::rational).collect();
    };
    let c = squarefree_part(p);
    let (c0, c1) = split_halves(&c);
    let mut out: Vec<QuadExt> = rational_roots(&poly_gcd(&c0, &c1))
        .into_iter()
        .map(|r| QuadExt::new(r, Rational::zero(), &d).expect("valid radicand"))
        .collect();

    let n = c.deg0();
    if n >= 2 {
        let cbar = c.conj();
        let npts = n * n + 1;
        let xs: Vec<QuadExt> = (0..npts).map(|i| QuadExt::from_i64(i as i64)).collect();
        let ys: Vec<QuadExt> = xs
            .iter()
            .map(|y0| {
                let shifted = cbar.compose(&UniPoly::new(vec![y0.clone(), -QuadExt::one()]));
                resultant(&c, &shifted)
            })
            .collect();
        let t = interpolate(&xs, &ys);
        let w = (&t * &t.conj()).to_rational().expect("norm is rational");
        let sqrt_d = QuadExt::new(Rational::zero(), Rational::one(), &d).expect("valid radicand");
        for y in rational_roots(&w) {
            let u = y / Rational::from_integer(BigInt::from(2));
            let sub = UniPoly::new(vec![QuadExt::rational(u.clone()), sqrt_d.clone()]);
            let e = c.compose(&sub);
            let (e0, e1) = split_halves(&e);
            for v in rational_roots(&poly_gcd(&e0, &e1)) {
                if !v.is_zero() {
                    out.push(QuadExt::new(u.clone(), v, &d).expect("valid radicand"));
                }
            }
        }
    }
    let mut dedup: Vec<QuadExt> = Vec::new();
    for r in out {
        if !dedup.contains(&r) {
            dedup.push(r);
        }
    }
    dedup
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    #[test]
    fn rational_roots_of_product() {
        let roots = [ratio(-7, 3), ratio(1, 2), rat(0), rat(5)];
        let mut p = UniPoly::from_i64(&[2, 0, 1]);
        for r in &roots {
            p = &p * &UniPoly::linear_root(r.clone());
        }
        p = &p * &UniPoly::linear_root(rat(5));
        let mut want = roots.to_vec();
        want.sort();
        assert_eq!(rational_roots(&p), want);
    }

    #[test]
    fn irrational_roots_are_skipped() {
        let p = UniPoly::from_i64(&[-2, 0, 1]);
        assert!(rational_roots(&p).is_empty());
        let p = &p * &UniPoly::from_i64(&[-3, 4]);
        assert_eq!(rational_roots(&p), vec![ratio(3, 4)]);
    }

    #[test]
    fn close_roots_separate() {
        let p = &UniPoly::linear_root(ratio(1000, 1001)) * &UniPoly::linear_root(ratio(1001, 1002));
        assert_eq!(rational_roots(&p).len(), 2);
    }

    #[test]
    fn quadratic_roots_found() {
        // (x − (1 + 2√5)) (x − 3) (x² + 1)
        let r = QuadExt::from_parts(1, 2, 5);
        let lin = UniPoly::linear_root(r.clone());
        let p = &(&lin * &UniPoly::linear_root(QuadExt::from_i64(3))) * &UniPoly::from_i64(&[1, 0, 1]);
        let roots = quadratic_field_roots(&p);
        assert_eq!(roots.len(), 2);
        assert!(roots.contains(&r));
        assert!(roots.contains(&QuadExt::from_i64(3)));
    }

    #[test]
    fn conjugate_pair_roots() {
        let r = QuadExt::from_parts(2, -1, 3);
        let p = &UniPoly::linear_root(r.clone()) * &UniPoly::linear_root(r.conj());
        let p = &p * &UniPoly::linear_root(QuadExt::from_parts(0, 1, 3));
        let roots = quadratic_field_roots(&p);
        assert_eq!(roots.len(), 3);
        assert!(roots.contains(&r.conj()));
    }
}
