//! Rosenhain curves, Igusa–Clebsch invariants of binary sextics, and the
//! identity relating them to the J-invariants of tangent configurations.

use crate::check::Check;
use crate::configuration::Configuration;
use crate::invariants::{configuration_j, JInvariants};
use crate::CoreError;
use num_traits::{One, Zero};
use sixlines_algebra::rational::{rat, ratio};
use sixlines_algebra::{weighted_equal, Rational, WeightedPoint};
use std::fmt;

/// A point of the projective line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum P1Point {
    Finite(Rational),
    Infinity,
}

impl fmt::Display for P1Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            P1Point::Finite(r) => write!(f, "{r}"),
            P1Point::Infinity => write!(f, "inf"),
        }
    }
}

/// `y² = x(x − 1)(x − λ1)(x − λ2)(x − λ3)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RosenhainCurve {
    pub lambda: [Rational; 3],
}

impl RosenhainCurve {
    pub fn new(l1: Rational, l2: Rational, l3: Rational) -> Result<Self, CoreError> {
        let lambda = [l1, l2, l3];
        for l in &lambda {
            if l.is_zero() || l.is_one() {
                return Err(CoreError::Precondition(format!("rosenhain parameter {l} must avoid 0 and 1")));
            }
        }
        if lambda[0] == lambda[1] || lambda[0] == lambda[2] || lambda[1] == lambda[2] {
            return Err(CoreError::Precondition("rosenhain parameters must be pairwise distinct".into()));
        }
        Ok(RosenhainCurve { lambda })
    }

    pub fn from_i64(l: [i64; 3]) -> Result<Self, CoreError> {
        Self::new(rat(l[0]), rat(l[1]), rat(l[2]))
    }

    /// Branch points in the order matching the lines of the tangent
    /// configuration: `∞, 0, 1, λ1, λ2, λ3`.
    pub fn sextic_roots(&self) -> [P1Point; 6] {
        let [l1, l2, l3] = self.lambda.clone();
        [
            P1Point::Infinity,
            P1Point::Finite(Rational::zero()),
            P1Point::Finite(Rational::one()),
            P1Point::Finite(l1),
            P1Point::Finite(l2),
            P1Point::Finite(l3),
        ]
    }

    pub fn tangent_configuration(&self) -> Configuration {
        let [l1, l2, l3] = self.lambda.clone();
        Configuration::from_rosenhain(l1, l2, l3).expect("validated parameters")
    }
}

/// `x ↦ (a x + b) / (c x + d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mobius {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
}

impl Mobius {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Result<Self, CoreError> {
        if (&a * &d - &b * &c).is_zero() {
            return Err(CoreError::Precondition("Möbius map must have nonzero determinant".into()));
        }
        Ok(Mobius { a, b, c, d })
    }

    pub fn apply(&self, p: &P1Point) -> P1Point {
        match p {
            P1Point::Infinity if self.c.is_zero() => P1Point::Infinity,
            P1Point::Infinity => P1Point::Finite(&self.a / &self.c),
            P1Point::Finite(x) => {
                let den = &self.c * x + &self.d;
                if den.is_zero() {
                    P1Point::Infinity
                } else {
                    P1Point::Finite((&self.a * x + &self.b) / den)
                }
            }
        }
    }

    /// `x ↦ x / (x + d)` with the least positive integer `d` keeping every
    /// root finite.
    pub fn finite_for(roots: &[P1Point]) -> Self {
        let mut d = 1i64;
        loop {
            let dd = rat(d);
            let hits = roots.iter().any(|r| matches!(r, P1Point::Finite(x) if (x + &dd).is_zero()));
            if !hits {
                return Mobius::new(Rational::one(), Rational::zero(), Rational::one(), dd).expect("d ≠ 0");
            }
            d += 1;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IgusaInvariants {
    pub i2: Rational,
    pub i4: Rational,
    pub i6: Rational,
    pub i10: Rational,
}

pub const IGUSA_WEIGHTS: [u32; 4] = [1, 2, 3, 5];

impl IgusaInvariants {
    pub fn weighted_point(&self) -> Result<WeightedPoint<Rational>, CoreError> {
        let coords = vec![self.i2.clone(), self.i4.clone(), self.i6.clone(), self.i10.clone()];
        Ok(WeightedPoint::new(coords, IGUSA_WEIGHTS.to_vec())?)
    }

    /// `[I4/4 : (I2 I4 − 3 I6)/8 : 0 : −243/4 I10 : 243/32 I2 I10]` in the
    /// J-weights.
    pub fn j_point(&self) -> JInvariants {
        let (i2, i4, i6, i10) = (&self.i2, &self.i4, &self.i6, &self.i10);
        JInvariants::new([
            i4 * ratio(1, 4),
            (i2 * i4 - i6 * ratio(3, 1)) * ratio(1, 8),
            Rational::zero(),
            i10 * ratio(-243, 4),
            i2 * i10 * ratio(243, 32),
        ])
    }
}

fn pair_partitions(items: &[usize]) -> Vec<Vec<(usize, usize)>> {
    match items {
        [] => vec![vec![]],
        [first, rest @ ..] => {
            let mut out = Vec::new();
            for (k, &second) in rest.iter().enumerate() {
                let remaining: Vec<usize> = rest.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, &v)| v).collect();
                for mut p in pair_partitions(&remaining) {
                    p.insert(0, (*first, second));
                    out.push(p);
                }
            }
            out
        }
    }
}

const PERMS3: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

/// Classical root-difference sums `(A, B, C, D)` of a sextic with the given
/// finite roots and leading coefficient.
fn root_sums(e: &[Rational; 6], lc: &Rational) -> IgusaInvariants {
    let sq: Vec<Vec<Rational>> = (0..6)
        .map(|i| (0..6).map(|j| { let d = &e[i] - &e[j]; &d * &d }).collect())
        .collect();
    let tri = |t: [usize; 3]| &(&sq[t[0]][t[1]] * &sq[t[0]][t[2]]) * &sq[t[1]][t[2]];

    let mut a = Rational::zero();
    for p in pair_partitions(&[0, 1, 2, 3, 4, 5]) {
        a += p.iter().fold(Rational::one(), |acc, &(i, j)| acc * &sq[i][j]);
    }
    let (mut b, mut c) = (Rational::zero(), Rational::zero());
    for i in 1..6 {
        for j in i + 1..6 {
            let t = [0, i, j];
            let u: Vec<usize> = (1..6).filter(|&k| k != i && k != j).collect();
            let u = [u[0], u[1], u[2]];
            let base = tri(t) * tri(u);
            for p in PERMS3 {
                c += (0..3).fold(base.clone(), |acc, k| acc * &sq[t[k]][u[p[k]]]);
            }
            b += base;
        }
    }
    let mut d = Rational::one();
    for i in 0..6 {
        for j in i + 1..6 {
            d *= &sq[i][j];
        }
    }
    let l2 = lc * lc;
    let l4 = &l2 * &l2;
    let l6 = &l4 * &l2;
    let l10 = &l6 * &l4;
    IgusaInvariants { i2: a * l2, i4: b * l4, i6: c * l6, i10: d * l10 }
}

/// Igusa–Clebsch invariants of the binary sextic with the given roots, after
/// moving them by `m` to finite positions.
pub fn igusa_clebsch_with(roots: &[P1Point; 6], m: &Mobius) -> Result<IgusaInvariants, CoreError> {
    for i in 0..6 {
        for j in i + 1..6 {
            if roots[i] == roots[j] {
                return Err(CoreError::Precondition(format!("repeated root {}", roots[i])));
            }
        }
    }
    // Each root r contributes the linear factor whose x-coefficient after
    // the substitution is d + r c, or −c for r = ∞.
    let mut lc = Rational::one();
    let mut moved = Vec::with_capacity(6);
    for r in roots {
        match (r, m.apply(r)) {
            (_, P1Point::Infinity) => {
                return Err(CoreError::Precondition(format!("Möbius map sends root {r} to infinity")));
            }
            (P1Point::Finite(x), P1Point::Finite(y)) => {
                lc *= &m.d + x * &m.c;
                moved.push(y);
            }
            (P1Point::Infinity, P1Point::Finite(y)) => {
                lc *= -m.c.clone();
                moved.push(y);
            }
        }
    }
    let e: [Rational; 6] = moved.try_into().expect("six roots");
    Ok(root_sums(&e, &lc))
}

pub fn igusa_clebsch(roots: &[P1Point; 6]) -> Result<IgusaInvariants, CoreError> {
    igusa_clebsch_with(roots, &Mobius::finite_for(roots))
}

/// The tangent-configuration J-point and the Igusa–Clebsch combination.
pub fn restriction_points(c: &RosenhainCurve) -> Result<(JInvariants, JInvariants), CoreError> {
    let j = configuration_j(&c.tangent_configuration());
    let ic = igusa_clebsch(&c.sextic_roots())?;
    Ok((j, ic.j_point()))
}

pub fn restriction_check(c: &RosenhainCurve) -> Result<Vec<Check>, CoreError> {
    let conf = c.tangent_configuration();
    let r = conf.do_coordinates().r;
    let (j, ic) = restriction_points(c)?;
    let eq = weighted_equal(&j.weighted_point()?, &ic.weighted_point()?)?;
    let fmt = |p: &JInvariants| p.j.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
    Ok(vec![
        Check::new("tangent-r-vanishes", r.is_zero(), format!("R = {r}")),
        Check::new("tangent-j4-vanishes", j.j4().is_zero(), format!("J4 = {}", j.j4())),
        Check::new("igusa-clebsch-restriction", eq, format!("J = [{}], Igusa = [{}]", fmt(&j), fmt(&ic))),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::check::all_passed;

    fn r(n: i64) -> Rational {
        rat(n)
    }

    #[test]
    fn fifteen_pair_partitions() {
        assert_eq!(pair_partitions(&[0, 1, 2, 3, 4, 5]).len(), 15);
    }

    #[test]
    fn reference_j_points() {
        let cases: [([i64; 3], [i64; 5]); 3] = [
            ([2, 3, 5], [2068, 44000, 0, -125971200, 8660520000]),
            ([2, 3, 7], [12148, 838880, 0, -6172588800, 979898472000]),
            ([3, 5, 7], [67408, 1897280, 0, -395045683200, 173820100608000]),
        ];
        for (l, jv) in cases {
            let c = RosenhainCurve::from_i64(l).unwrap();
            let (j, ic) = restriction_points(&c).unwrap();
            let want = JInvariants::from_i64(jv).weighted_point().unwrap();
            assert!(weighted_equal(&j.weighted_point().unwrap(), &want).unwrap(), "{l:?}");
            assert!(weighted_equal(&ic.weighted_point().unwrap(), &want).unwrap(), "{l:?}");
            assert!(all_passed(&restriction_check(&c).unwrap()));
        }
    }

    #[test]
    fn mobius_independence() {
        let roots = RosenhainCurve::from_i64([2, 3, 5]).unwrap().sextic_roots();
        let m1 = Mobius::new(r(1), r(0), r(1), r(-10)).unwrap();
        let m2 = Mobius::new(r(3), r(-1), r(2), r(7)).unwrap();
        let p = igusa_clebsch_with(&roots, &m1).unwrap().weighted_point().unwrap();
        let q = igusa_clebsch_with(&roots, &m2).unwrap().weighted_point().unwrap();
        assert!(weighted_equal(&p, &q).unwrap());
    }

    #[test]
    fn permutation_invariance() {
        let roots = RosenhainCurve::from_i64([2, 3, 7]).unwrap().sextic_roots();
        let base = igusa_clebsch(&roots).unwrap().weighted_point().unwrap();
        let mut rev = roots.clone();
        rev.reverse();
        rev.swap(0, 3);
        let other = igusa_clebsch(&rev).unwrap().weighted_point().unwrap();
        assert!(weighted_equal(&base, &other).unwrap());
    }

    #[test]
    fn degenerate_rejected() {
        assert!(RosenhainCurve::from_i64([2, 2, 5]).is_err());
        assert!(RosenhainCurve::from_i64([0, 2, 5]).is_err());
        assert!(RosenhainCurve::from_i64([1, 2, 5]).is_err());
        let mut roots = RosenhainCurve::from_i64([2, 3, 5]).unwrap().sextic_roots();
        roots[5] = P1Point::Finite(r(2));
        assert!(igusa_clebsch(&roots).is_err());
        assert!(Mobius::new(r(1), r(2), r(2), r(4)).is_err());
    }
}
