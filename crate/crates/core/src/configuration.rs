//! Six lines in the plane, their Plücker minors and Dolgachev–Ortland
//! coordinates, the degeneration strata, and the S6 / association actions.

use crate::check::Check;
use crate::error::precondition;
use crate::ring::{det3, Ring};
use crate::CoreError;
use num_traits::{One, Zero};
use sixlines_algebra::rational::rat;
use sixlines_algebra::Rational;
use std::collections::BTreeSet;

/// The minors entering `t_1 .. t_10`, 1-based.
pub const T_MINORS: [([usize; 3], [usize; 3]); 10] = [
    ([1, 3, 5], [2, 4, 6]),
    ([1, 4, 5], [2, 3, 6]),
    ([1, 4, 6], [2, 3, 5]),
    ([1, 3, 6], [2, 4, 5]),
    ([1, 2, 5], [3, 4, 6]),
    ([1, 2, 6], [3, 4, 5]),
    ([1, 3, 4], [2, 5, 6]),
    ([1, 2, 4], [3, 5, 6]),
    ([1, 5, 6], [2, 3, 4]),
    ([1, 2, 3], [4, 5, 6]),
];

const R_PLUS: [[usize; 3]; 4] = [[1, 2, 3], [1, 4, 5], [2, 4, 6], [3, 5, 6]];
const R_MINUS: [[usize; 3]; 4] = [[1, 2, 4], [1, 3, 5], [2, 3, 6], [4, 5, 6]];

/// The fifteen linear relations, as coefficient vectors on `t_1 .. t_10`.
pub const LINEAR_RELATIONS: [[i64; 10]; 15] = [
    [1, -1, 0, 0, -1, 0, 0, 0, -1, 0],
    [1, -1, 0, 0, 0, -1, -1, 0, 0, 0],
    [1, 0, -1, 0, -1, 0, 0, 0, 0, -1],
    [1, 0, -1, 0, 0, -1, 0, -1, 0, 0],
    [1, 0, 0, -1, 0, 0, -1, 0, 0, -1],
    [1, 0, 0, -1, 0, 0, 0, -1, -1, 0],
    [0, 1, -1, 0, 0, 0, 1, -1, 0, 0],
    [0, 1, -1, 0, 0, 0, 0, 0, 1, -1],
    [0, 1, 0, -1, 1, 0, 0, -1, 0, 0],
    [0, 1, 0, -1, 0, 1, 0, 0, 0, -1],
    [0, 0, 1, -1, 1, 0, -1, 0, 0, 0],
    [0, 0, 1, -1, 0, 1, 0, 0, -1, 0],
    [0, 0, 0, 0, 1, -1, -1, 0, 1, 0],
    [0, 0, 0, 0, 1, -1, 0, -1, 0, 1],
    [0, 0, 0, 0, 0, 0, 1, -1, -1, 1],
];

/// Each discriminant component is cut out by three equalities
/// `t_i = s · t_j` (1-based, `s = ±1`).
pub const DISC_COMPONENTS: [[(usize, usize, i64); 3]; 15] = [
    [(1, 2, 1), (5, 9, -1), (6, 7, -1)],
    [(1, 3, 1), (5, 10, -1), (6, 8, -1)],
    [(1, 4, 1), (7, 10, -1), (8, 9, -1)],
    [(1, 5, 1), (2, 9, -1), (3, 10, -1)],
    [(1, 6, 1), (2, 7, -1), (3, 8, -1)],
    [(1, 7, 1), (2, 6, -1), (4, 10, -1)],
    [(1, 8, 1), (3, 6, -1), (4, 9, -1)],
    [(1, 9, 1), (2, 5, -1), (4, 8, -1)],
    [(1, 10, 1), (3, 5, -1), (4, 7, -1)],
    [(2, 3, 1), (7, 8, 1), (9, 10, 1)],
    [(2, 4, 1), (5, 8, 1), (6, 10, 1)],
    [(2, 8, 1), (3, 7, 1), (4, 5, 1)],
    [(2, 10, 1), (3, 9, 1), (4, 6, 1)],
    [(3, 4, 1), (5, 7, 1), (6, 9, 1)],
    [(5, 6, 1), (7, 9, 1), (8, 10, 1)],
];

/// Where a configuration came from.
#[derive(Clone, Debug, PartialEq)]
pub enum Provenance {
    Lines,
    Moduli([Rational; 4]),
    Rosenhain([Rational; 3]),
}

/// Six lines `a_i z1 + b_i z2 + c_i z3 = 0`, i.e. the columns of a 3×6 matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Configuration {
    lines: [[Rational; 3]; 6],
    provenance: Provenance,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DOCoordinates {
    pub t: [Rational; 10],
    pub r: Rational,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StratumKind {
    Generic,
    TangentConic,
    ThreeConcurrent,
    DiscSComponent,
    TwoVanish,
    ThreeVanish,
    Mixed,
    FourConcurrent,
    DoubleLine,
    OtherDegenerate,
}

impl StratumKind {
    pub fn label(&self) -> &'static str {
        match self {
            StratumKind::Generic => "Generic(0)",
            StratumKind::TangentConic => "TangentConic(1)",
            StratumKind::ThreeConcurrent => "ThreeConcurrent(2)",
            StratumKind::DiscSComponent => "DiscSComponent(2b)",
            StratumKind::TwoVanish => "TwoVanish(3)",
            StratumKind::ThreeVanish => "ThreeVanish(4)",
            StratumKind::Mixed => "Mixed(5)",
            StratumKind::FourConcurrent => "FourConcurrentOrDoubleLine(6a)",
            StratumKind::DoubleLine => "FourConcurrentOrDoubleLine(6b)",
            StratumKind::OtherDegenerate => "OtherDegenerate",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stratum {
    pub kind: StratumKind,
    /// 1-based indices `i` with `t_i = 0`.
    pub vanishing_t: BTreeSet<usize>,
    pub r_is_zero: bool,
}

fn line_is_zero(l: &[Rational; 3]) -> bool {
    l.iter().all(|c| c.is_zero())
}

fn proportional(l: &[Rational; 3], m: &[Rational; 3]) -> bool {
    let cross = [
        &l[1] * &m[2] - &l[2] * &m[1],
        &l[2] * &m[0] - &l[0] * &m[2],
        &l[0] * &m[1] - &l[1] * &m[0],
    ];
    line_is_zero(&cross)
}

/// Tangency of `a z1 + b z2 + c z3 = 0` to `z3² − 4 z1 z2 = 0`: restrict the
/// conic to the line and test the binary quadratic's discriminant.
pub fn tangent_to_standard_conic(l: &[Rational; 3]) -> bool {
    let conic = |p: &[Rational; 3]| &p[2] * &p[2] - rat(4) * &p[0] * &p[1];
    let polar = |p: &[Rational; 3], q: &[Rational; 3]| {
        &p[2] * &q[2] - rat(2) * (&p[0] * &q[1] + &p[1] * &q[0])
    };
    let (p, q) = line_basis(l);
    let disc = polar(&p, &q) * polar(&p, &q) - conic(&p) * conic(&q);
    disc.is_zero()
}

/// Two independent points spanning a nonzero line.
fn line_basis(l: &[Rational; 3]) -> ([Rational; 3], [Rational; 3]) {
    let z = Rational::zero;
    let [a, b, c] = l.clone();
    if !c.is_zero() {
        ([c.clone(), z(), -a], [z(), c, -b])
    } else if !b.is_zero() {
        ([b.clone(), -a, z()], [z(), z(), Rational::one()])
    } else {
        ([z(), Rational::one(), z()], [z(), z(), Rational::one()])
    }
}

/// `D_ijk` for 1-based indices over any coefficient ring.
pub fn minor<T: Ring>(cols: &[[T; 3]; 6], idx: [usize; 3]) -> T {
    let [i, j, k] = idx.map(|n| &cols[n - 1]);
    det3([[&i[0], &i[1], &i[2]], [&j[0], &j[1], &j[2]], [&k[0], &k[1], &k[2]]])
}

/// `(t_1 .. t_10, R)` over any coefficient ring.
pub fn do_coordinates_of<T: Ring>(cols: &[[T; 3]; 6]) -> ([T; 10], T) {
    let t = T_MINORS.map(|(p, q)| minor(cols, p).mul(&minor(cols, q)));
    let prod = |idx: &[[usize; 3]; 4]| {
        idx.iter().skip(1).fold(minor(cols, idx[0]), |acc, m| acc.mul(&minor(cols, *m)))
    };
    let r = prod(&R_PLUS).sub(&prod(&R_MINUS));
    (t, r)
}

/// The six lines in moduli normal form over any ring, given `0`, `1` and `a, b, c, d`.
pub fn moduli_columns<T: Ring>(zero: &T, one: &T, m: [&T; 4]) -> [[T; 3]; 6] {
    let (z, o) = (zero.clone(), one.clone());
    [
        [o.clone(), z.clone(), z.clone()],
        [z.clone(), o.clone(), z.clone()],
        [z.clone(), z.clone(), o.clone()],
        [o.clone(), o.clone(), o.clone()],
        [o.clone(), m[0].clone(), m[1].clone()],
        [o, m[2].clone(), m[3].clone()],
    ]
}

/// The closed forms of `t` and `R` in the moduli, used as an independent oracle.
pub fn moduli_closed_forms<T: Ring>(one: &T, m: [&T; 4]) -> ([T; 10], T) {
    let [a, b, c, d] = m;
    let sub1 = |x: &T| x.sub(one);
    let ad = a.mul(d);
    let bc = b.mul(c);
    let t = [
        a.mul(&sub1(d)),
        b.sub(a),
        d.sub(c),
        c.mul(&sub1(b)),
        b.mul(&sub1(c)),
        d.mul(&sub1(a)),
        d.sub(b),
        c.sub(a),
        ad.sub(&bc),
        ad.sub(&bc).sub(a).add(b).add(c).sub(d),
    ];
    let abc = a.mul(&bc);
    let r = abc
        .neg()
        .add(&ad.mul(b))
        .add(&ad.mul(c))
        .sub(&bc.mul(d))
        .sub(&ad)
        .add(&bc);
    (t, r)
}

fn check_index(i: usize) -> Result<(), CoreError> {
    if (1..=6).contains(&i) {
        Ok(())
    } else {
        Err(precondition(format!("line index {i} outside 1..6")))
    }
}

impl Configuration {
    pub fn from_lines(lines: [[Rational; 3]; 6]) -> Result<Self, CoreError> {
        if let Some(i) = lines.iter().position(line_is_zero) {
            return Err(precondition(format!("line {} has all coefficients zero", i + 1)));
        }
        Ok(Configuration { lines, provenance: Provenance::Lines })
    }

    /// `z1, z2, z3, z1+z2+z3, z1+a z2+b z3, z1+c z2+d z3`.
    pub fn from_moduli(a: Rational, b: Rational, c: Rational, d: Rational) -> Self {
        let m = [a, b, c, d];
        let lines = moduli_columns(&Rational::zero(), &Rational::one(), [&m[0], &m[1], &m[2], &m[3]]);
        Configuration { lines, provenance: Provenance::Moduli(m) }
    }

    /// `z1, z2, z1+z2−z3`, and `λ² z1 + z2 − λ z3` for each λ.
    pub fn from_rosenhain(l1: Rational, l2: Rational, l3: Rational) -> Result<Self, CoreError> {
        let ls = [l1, l2, l3];
        for l in &ls {
            if l.is_zero() || l.is_one() {
                return Err(precondition(format!("rosenhain parameter {l} must avoid 0 and 1")));
            }
        }
        if ls[0] == ls[1] || ls[0] == ls[2] || ls[1] == ls[2] {
            return Err(precondition("rosenhain parameters must be pairwise distinct"));
        }
        let (z, o) = (Rational::zero(), Rational::one());
        let tl = |l: &Rational| [l * l, o.clone(), -l.clone()];
        let lines = [
            [o.clone(), z.clone(), z.clone()],
            [z.clone(), o.clone(), z],
            [o.clone(), o.clone(), -o.clone()],
            tl(&ls[0]),
            tl(&ls[1]),
            tl(&ls[2]),
        ];
        Ok(Configuration { lines, provenance: Provenance::Rosenhain(ls) })
    }

    pub fn lines(&self) -> &[[Rational; 3]; 6] {
        &self.lines
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    /// `D_ijk` with `1 ≤ i < j < k ≤ 6`.
    pub fn plucker(&self, i: usize, j: usize, k: usize) -> Result<Rational, CoreError> {
        for n in [i, j, k] {
            check_index(n)?;
        }
        if !(i < j && j < k) {
            return Err(precondition(format!("plucker indices must increase, got ({i},{j},{k})")));
        }
        Ok(minor(&self.lines, [i, j, k]))
    }

    pub fn do_coordinates(&self) -> DOCoordinates {
        let (t, r) = do_coordinates_of(&self.lines);
        DOCoordinates { t, r }
    }

    pub fn has_double_line(&self) -> bool {
        (0..6).any(|i| (i + 1..6).any(|j| proportional(&self.lines[i], &self.lines[j])))
    }

    pub fn classify(&self) -> Stratum {
        let d = self.do_coordinates();
        let vanishing_t: BTreeSet<usize> = (1..=10).filter(|&i| d.t[i - 1].is_zero()).collect();
        let r_is_zero = d.r.is_zero();
        let kind = match (vanishing_t.len(), r_is_zero) {
            (0, false) => StratumKind::Generic,
            (0, true) => StratumKind::TangentConic,
            (1..=3, true) => StratumKind::Mixed,
            (1, false) => StratumKind::ThreeConcurrent,
            (2, false) => StratumKind::TwoVanish,
            (3, false) => StratumKind::ThreeVanish,
            (4, true) if self.has_double_line() => StratumKind::DoubleLine,
            (4, true) => StratumKind::FourConcurrent,
            _ => StratumKind::OtherDegenerate,
        };
        Stratum { kind, vanishing_t, r_is_zero }
    }

    /// [`Configuration::classify`], with generic configurations lying on a
    /// component of the Satake-sextic discriminant relabelled `DiscSComponent`.
    pub fn classify_refined(&self) -> Stratum {
        let mut s = self.classify();
        if s.kind == StratumKind::Generic && !self.do_coordinates().discriminant_components().is_empty() {
            s.kind = StratumKind::DiscSComponent;
        }
        s
    }

    /// Column `i` of the result is column `sigma[i]` of the input (1-based images).
    pub fn permute(&self, sigma: &[usize; 6]) -> Result<Self, CoreError> {
        let mut seen = [false; 6];
        for &s in sigma {
            check_index(s)?;
            if std::mem::replace(&mut seen[s - 1], true) {
                return Err(precondition(format!("{sigma:?} is not a permutation")));
            }
        }
        let lines = sigma.map(|s| self.lines[s - 1].clone());
        Ok(Configuration { lines, provenance: Provenance::Lines })
    }

    /// Rescales line `i` (1-based) by a nonzero rational.
    pub fn rescale_line(&self, i: usize, c: &Rational) -> Result<Self, CoreError> {
        check_index(i)?;
        if c.is_zero() {
            return Err(precondition("line rescaling factor must be nonzero"));
        }
        let mut lines = self.lines.clone();
        lines[i - 1] = lines[i - 1].clone().map(|x| x * c);
        Ok(Configuration { lines, provenance: Provenance::Lines })
    }

    /// Left-multiplies the coefficient matrix by `m`.
    pub fn transform(&self, m: &[[Rational; 3]; 3]) -> Self {
        let lines = self.lines.clone().map(|v| {
            std::array::from_fn(|r| (0..3).fold(Rational::zero(), |acc, k| acc + &m[r][k] * &v[k]))
        });
        Configuration { lines, provenance: Provenance::Lines }
    }
}

impl DOCoordinates {
    /// The fifteen linear relations followed by the quartic identity for `R²`.
    pub fn verify_relations(&self) -> Vec<Check> {
        let mut out: Vec<Check> = LINEAR_RELATIONS
            .iter()
            .enumerate()
            .map(|(n, row)| {
                let v = linear_value(row, &self.t);
                Check::new(format!("linear-relation-{}", n + 1), v.is_zero(), format!("residual {v}"))
            })
            .collect();
        let lhs = &self.r * &self.r;
        let rhs = r_squared_expression(&self.t);
        out.push(Check::new(
            "r-squared-identity",
            lhs == rhs,
            format!("R^2 = {lhs}, quartic = {rhs}"),
        ));
        out
    }

    /// The association involution `(t, R) ↦ (t, −R)`.
    pub fn associate(&self) -> Self {
        DOCoordinates { t: self.t.clone(), r: -self.r.clone() }
    }

    /// 1-based indices of the components whose three equalities hold.
    pub fn discriminant_components(&self) -> Vec<usize> {
        DISC_COMPONENTS
            .iter()
            .enumerate()
            .filter(|(_, eqs)| {
                eqs.iter().all(|&(i, j, s)| self.t[i - 1] == &self.t[j - 1] * rat(s))
            })
            .map(|(n, _)| n + 1)
            .collect()
    }
}

pub fn linear_value<T: Ring>(row: &[i64; 10], t: &[T; 10]) -> T {
    let terms: Vec<(i64, &T)> = row.iter().copied().zip(t.iter()).collect();
    T::lin(&terms)
}

/// `((Σ t²)² − 4 Σ t⁴) / 12`.
pub fn r_squared_expression<T: Ring>(t: &[T; 10]) -> T {
    let sq: Vec<T> = t.iter().map(|x| x.mul(x)).collect();
    let s2 = sq.iter().skip(1).fold(sq[0].clone(), |a, x| a.add(x));
    let s4 = sq.iter().skip(1).fold(sq[0].mul(&sq[0]), |a, x| a.add(&x.mul(x)));
    s2.mul(&s2).sub(&s4.scale(&rat(4))).scale(&Rational::new(1.into(), 12.into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn moduli(v: [i64; 4]) -> Configuration {
        Configuration::from_moduli(rat(v[0]), rat(v[1]), rat(v[2]), rat(v[3]))
    }

    fn ts(v: [i64; 10]) -> [Rational; 10] {
        v.map(rat)
    }

    #[test]
    fn golden_coordinates() {
        let c = moduli([2, 3, 4, 5]);
        assert_eq!(c.lines()[4], [rat(1), rat(2), rat(3)]);
        assert_eq!(c.lines()[5], [rat(1), rat(4), rat(5)]);
        let d = c.do_coordinates();
        assert_eq!(d.t, ts([8, 1, 1, 8, 9, 5, 2, 2, -2, -2]));
        assert_eq!(d.r, rat(-12));
        assert_eq!(c.plucker(1, 2, 3).unwrap(), rat(1));
        assert_eq!(c.plucker(4, 5, 6).unwrap(), rat(-2));
        assert!(c.plucker(3, 2, 1).is_err());
        assert!(c.plucker(1, 2, 7).is_err());
        assert_eq!(c.classify().kind, StratumKind::Generic);
    }

    #[test]
    fn closed_forms_agree() {
        let m = [rat(7), rat(-3), ratio_(2, 5), rat(11)];
        let c = Configuration::from_moduli(m[0].clone(), m[1].clone(), m[2].clone(), m[3].clone());
        let d = c.do_coordinates();
        let (t, r) = moduli_closed_forms(&rat(1), [&m[0], &m[1], &m[2], &m[3]]);
        assert_eq!(d.t, t);
        assert_eq!(d.r, r);
    }

    fn ratio_(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn three_concurrent_example() {
        let c = moduli([2, 2, 4, 5]);
        let d = c.do_coordinates();
        assert!(d.t[1].is_zero());
        assert_eq!(d.r, rat(2));
        let s = c.classify();
        assert_eq!(s.kind, StratumKind::ThreeConcurrent);
        assert_eq!(s.vanishing_t, BTreeSet::from([2]));
    }

    #[test]
    fn degenerate_moduli() {
        let c = moduli([1, 1, 1, 1]);
        assert!(c.has_double_line());
        assert_ne!(c.classify().kind, StratumKind::Generic);
    }

    #[test]
    fn rosenhain_lines() {
        let c = Configuration::from_rosenhain(rat(2), rat(3), rat(5)).unwrap();
        assert_eq!(c.lines()[3], [rat(4), rat(1), rat(-2)]);
        assert!(c.lines().iter().all(tangent_to_standard_conic));
        assert!(c.do_coordinates().r.is_zero());
        assert_eq!(c.classify().kind, StratumKind::TangentConic);
        assert!(Configuration::from_rosenhain(rat(2), rat(3), rat(3)).is_err());
        assert!(Configuration::from_rosenhain(rat(1), rat(3), rat(4)).is_err());
    }

    #[test]
    fn relations_hold_and_break() {
        let d = moduli([2, 3, 4, 5]).do_coordinates();
        assert!(d.verify_relations().iter().all(|c| c.passed));
        assert_eq!(r_squared_expression(&d.t), rat(144));
        let mut bad = d.clone();
        bad.t[0] = &bad.t[0] + rat(1);
        let failed = bad.verify_relations().iter().take(15).filter(|c| !c.passed).count();
        assert!(failed >= 6);
        let zero = DOCoordinates { t: ts([0; 10]), r: rat(0) };
        assert!(zero.verify_relations().iter().all(|c| c.passed));
    }

    #[test]
    fn association_involution() {
        let d = moduli([2, 3, 4, 5]).do_coordinates();
        assert_eq!(d.associate().r, rat(12));
        assert_eq!(d.associate().associate(), d);
        let tan = Configuration::from_rosenhain(rat(2), rat(3), rat(5)).unwrap().do_coordinates();
        assert_eq!(tan.associate(), tan);
    }

    #[test]
    fn component_ten_at_golden_point() {
        let c = moduli([2, 3, 4, 5]);
        // x3 = x4 gives component 10 and x2 = x5 gives component 3.
        assert_eq!(c.do_coordinates().discriminant_components(), vec![3, 10]);
        assert_eq!(c.classify_refined().kind, StratumKind::DiscSComponent);
    }

    #[test]
    fn permutations_keep_stratum() {
        let c = moduli([2, 3, 4, 5]);
        assert_eq!(c.permute(&[1, 2, 3, 4, 5, 6]).unwrap().do_coordinates(), c.do_coordinates());
        assert!(c.permute(&[1, 1, 3, 4, 5, 6]).is_err());
        let swapped = c.permute(&[2, 1, 3, 4, 5, 6]).unwrap();
        assert_ne!(swapped.do_coordinates().t, c.do_coordinates().t);
        assert_eq!(swapped.classify().kind, StratumKind::Generic);
    }
}
