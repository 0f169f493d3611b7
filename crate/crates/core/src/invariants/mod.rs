//! Satake coordinates, the invariants J2..J6, the Satake sextic and the
//! discriminant-type invariants built from it.

mod moduli_forms;

use crate::configuration::Configuration;
use crate::error::precondition;
use crate::ring::Ring;
use crate::CoreError;
use num_traits::Zero;
use sixlines_algebra::rational::{rat, ratio};
use sixlines_algebra::unipoly::{discriminant, resultant_formal};
use sixlines_algebra::{Field, MultiPoly, Rational, UniPoly, WeightedPoint};

pub const J_WEIGHTS: [u32; 5] = [2, 3, 4, 5, 6];

/// `x_1 .. x_6` from `t`; they sum to zero.
pub fn satake_from_t<T: Ring>(t: &[T; 10]) -> [T; 6] {
    let [t1, t5, t6, t7, t8] = [&t[0], &t[4], &t[5], &t[6], &t[7]];
    [
        T::lin(&[(2, t1), (2, t5), (-3, t6), (-1, t7), (-1, t8)]),
        T::lin(&[(-1, t1), (-1, t5), (-1, t7), (2, t8)]),
        T::lin(&[(-1, t1), (2, t5), (-1, t7), (-1, t8)]),
        T::lin(&[(-1, t1), (-1, t5), (3, t6), (2, t7), (2, t8)]),
        T::lin(&[(-1, t1), (-1, t5), (2, t7), (-1, t8)]),
        T::lin(&[(2, t1), (-1, t5), (-1, t7), (-1, t8)]),
    ]
}

/// All ten `t_i` recovered from triples of Satake coordinates.
pub fn t_from_satake<T: Ring>(x: &[T; 6]) -> [T; 10] {
    let tri = |i: usize, j: usize, k: usize, sign: i64| {
        x[i - 1].add(&x[j - 1]).add(&x[k - 1]).scale(&ratio(sign, 3))
    };
    [
        tri(2, 3, 5, -1),
        tri(3, 4, 5, -1),
        tri(2, 3, 4, -1),
        tri(2, 4, 5, -1),
        tri(1, 3, 4, 1),
        tri(1, 2, 5, -1),
        tri(1, 4, 5, 1),
        tri(1, 2, 4, 1),
        tri(1, 2, 3, -1),
        tri(1, 3, 5, -1),
    ]
}

/// `s_1 .. s_6`.
pub fn power_sums<T: Ring>(x: &[T; 6]) -> [T; 6] {
    std::array::from_fn(|k| {
        let e = k as u32 + 1;
        x.iter().skip(1).fold(x[0].pow(e), |acc, xi| acc.add(&xi.pow(e)))
    })
}

/// J2..J6 from the power sums `s_2 .. s_6` (J5 with the −12·s5 coefficient).
pub fn j_from_power_sums<T: Ring>(s: &[T; 6]) -> [T; 5] {
    let [_, s2, s3, s4, s5, s6] = s;
    let j2 = s2.scale(&ratio(1, 12));
    let j3 = s3.scale(&ratio(1, 12));
    let j4 = s4.scale(&rat(4)).sub(&s2.mul(s2)).scale(&ratio(1, 64));
    let j5 = s2.mul(s3).scale(&rat(5)).sub(&s5.scale(&rat(12))).scale(&ratio(1, 240));
    let s2sq = s2.mul(s2);
    let j6 = s2sq
        .mul(s2)
        .scale(&rat(3))
        .sub(&s3.mul(s3).scale(&rat(4)))
        .sub(&s2.mul(s4).scale(&rat(18)))
        .add(&s6.scale(&rat(24)))
        .scale(&ratio(1, 576));
    [j2, j3, j4, j5, j6]
}

/// `s_4, s_5, s_6` back from J.
pub fn power_sums_from_j<T: Ring>(j: &[T; 5]) -> [T; 3] {
    let [j2, j3, j4, j5, j6] = j;
    let j2sq = j2.mul(j2);
    let s4 = j2sq.scale(&rat(36)).add(&j4.scale(&rat(16)));
    let s5 = j2.mul(j3).scale(&rat(60)).sub(&j5.scale(&rat(20)));
    let s6 = j2sq
        .mul(j2)
        .scale(&rat(108))
        .add(&j2.mul(j4).scale(&rat(144)))
        .add(&j3.mul(j3).scale(&rat(24)))
        .add(&j6.scale(&rat(24)));
    [s4, s5, s6]
}

#[derive(Clone, Debug, PartialEq)]
pub struct SatakeCoordinates {
    pub x: [Rational; 6],
}

#[derive(Clone, Debug, PartialEq)]
pub struct JInvariants<F = Rational> {
    pub j: [F; 5],
}

impl<F: Field> JInvariants<F> {
    pub fn new(j: [F; 5]) -> Self {
        JInvariants { j }
    }

    pub fn j2(&self) -> &F {
        &self.j[0]
    }
    pub fn j3(&self) -> &F {
        &self.j[1]
    }
    pub fn j4(&self) -> &F {
        &self.j[2]
    }
    pub fn j5(&self) -> &F {
        &self.j[3]
    }
    pub fn j6(&self) -> &F {
        &self.j[4]
    }

    /// `[J2 : J3 : J4 : J5 : J6]` in P(2,3,4,5,6).
    pub fn weighted_point(&self) -> Result<WeightedPoint<F>, CoreError> {
        Ok(WeightedPoint::new(self.j.to_vec(), J_WEIGHTS.to_vec())?)
    }

    /// `(J3, J4, J5) ≠ 0`.
    pub fn is_valid(&self) -> bool {
        !(self.j3().is_zero() && self.j4().is_zero() && self.j5().is_zero())
    }
}

impl JInvariants<Rational> {
    pub fn from_i64(v: [i64; 5]) -> Self {
        JInvariants { j: v.map(rat) }
    }
}

impl SatakeCoordinates {
    pub fn from_t(t: &[Rational; 10]) -> Self {
        SatakeCoordinates { x: satake_from_t(t) }
    }

    pub fn power_sums(&self) -> [Rational; 6] {
        power_sums(&self.x)
    }
}

pub fn j_invariants(x: &SatakeCoordinates) -> Result<JInvariants, CoreError> {
    let s = x.power_sums();
    if !s[0].is_zero() {
        return Err(precondition(format!("Satake coordinates must sum to zero, got {}", s[0])));
    }
    Ok(JInvariants { j: j_from_power_sums(&s) })
}

/// J through determinants → t → Satake coordinates → power sums.
pub fn configuration_j(c: &Configuration) -> JInvariants {
    let x = SatakeCoordinates::from_t(&c.do_coordinates().t);
    j_invariants(&x).expect("Satake coordinates sum to zero")
}

/// `B = x³ − 3J2x − 2J3`, `A = J4x² − J5x + J6`, `S = B² − 4A`.
#[derive(Clone, Debug, PartialEq)]
pub struct SatakeSextic<F> {
    pub b: UniPoly<F>,
    pub a: UniPoly<F>,
    pub s: UniPoly<F>,
}

pub fn satake_sextic<F: Field>(j: &JInvariants<F>) -> SatakeSextic<F> {
    let b = UniPoly::new(vec![
        -(F::from_i64(2) * j.j3()),
        -(F::from_i64(3) * j.j2()),
        F::zero(),
        F::one(),
    ]);
    let a = UniPoly::new(vec![j.j6().clone(), -j.j5().clone(), j.j4().clone()]);
    let s = &(&b * &b) - &a.scale(&F::from_i64(4));
    SatakeSextic { b, a, s }
}

#[derive(Clone, Debug, PartialEq)]
pub struct DerivedInvariants<F> {
    pub disc_a: F,
    pub res_ab: F,
    pub disc_s: F,
}

/// `Disc(A) = J5² − 4J4J6`, `Res(A, B)` and `Disc(S)` by the resultant algorithms.
/// `A` keeps formal degree 2 when `J4 = 0`.
pub fn derived_invariants<F: Field>(j: &JInvariants<F>) -> DerivedInvariants<F> {
    let sx = satake_sextic(j);
    let disc_a = j.j5().clone() * j.j5() - F::from_i64(4) * j.j4() * j.j6();
    let res_ab = resultant_formal(&sx.a, 2, &sx.b, 3).expect("A is quadratic, B cubic");
    let disc_s = discriminant(&sx.s).expect("S has degree 6");
    DerivedInvariants { disc_a, res_ab, disc_s }
}

/// The explicit degree-18 expression for `Res(A, B)` in the J's.
pub fn res_ab_closed_form<T: Ring>(j: &[T; 5]) -> T {
    let [j2, j3, j4, j5, j6] = j;
    let m = |fs: &[&T]| fs.iter().skip(1).fold(fs[0].clone(), |acc, f| acc.mul(f));
    T::lin(&[
        (9, &m(&[j2, j2, j4, j4, j6])),
        (6, &m(&[j2, j3, j4, j4, j5])),
        (4, &m(&[j3, j3, j4, j4, j4])),
        (6, &m(&[j2, j4, j6, j6])),
        (-3, &m(&[j2, j5, j5, j6])),
        (6, &m(&[j3, j4, j5, j6])),
        (-2, &m(&[j3, j5, j5, j5])),
        (1, &m(&[j6, j6, j6])),
    ])
}

/// `3³⁰ · Π (t_i − t_j)²` over the fifteen listed pairs.
pub fn disc_s_product<T: Ring>(t: &[T; 10]) -> T {
    const PAIRS: [(usize, usize); 15] = [
        (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7), (1, 8), (1, 9), (1, 10),
        (2, 3), (3, 4), (4, 5), (5, 6), (2, 4), (4, 6),
    ];
    let mut acc: Option<T> = None;
    for (i, j) in PAIRS {
        let d = t[i - 1].sub(&t[j - 1]);
        let d2 = d.mul(&d);
        acc = Some(match acc {
            None => d2,
            Some(a) => a.mul(&d2),
        });
    }
    let three30 = Rational::from_integer(num_bigint::BigInt::from(3).pow(30));
    acc.expect("fifteen factors").scale(&three30)
}

/// `2⁻⁴ 3¹⁰ Π t_i`.
pub fn disc_a_product<T: Ring>(t: &[T; 10]) -> T {
    let p = t.iter().skip(1).fold(t[0].clone(), |acc, x| acc.mul(x));
    p.scale(&ratio(59049, 16))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StratumFlags {
    pub valid: bool,
    pub tangent: bool,
    pub concurrent: bool,
    pub res_ab_zero: bool,
    pub cases_3_4: bool,
    pub case_5: bool,
    pub disc_s_component: bool,
}

pub fn stratum_from_invariants<F: Field>(j: &JInvariants<F>, d: &DerivedInvariants<F>) -> StratumFlags {
    StratumFlags {
        valid: j.is_valid(),
        tangent: j.j4().is_zero(),
        concurrent: d.disc_a.is_zero(),
        res_ab_zero: d.res_ab.is_zero(),
        cases_3_4: d.disc_a.is_zero() && d.res_ab.is_zero(),
        case_5: j.j4().is_zero() && j.j5().is_zero(),
        disc_s_component: d.disc_s.is_zero(),
    }
}

fn eval_table(terms: &[(i64, [u32; 4])], m: &[Rational; 4]) -> Rational {
    let mut acc = Rational::zero();
    for (c, e) in terms {
        let mut v = rat(*c);
        for (x, &k) in m.iter().zip(e) {
            if k > 0 {
                v *= x.powu(k);
            }
        }
        acc += v;
    }
    acc
}

fn table_poly(terms: &[(i64, [u32; 4])]) -> MultiPoly {
    let mut acc = MultiPoly::zero(4);
    for (c, e) in terms {
        acc = &acc + &MultiPoly::term(4, rat(*c), e.to_vec());
    }
    acc
}

/// Monomials by which the raw J′6 table must be lowered:
/// `2·a³b³d³` and `a²c⁴d²`.
const J6_FIX: [(i64, [u32; 4]); 2] = [(2, [3, 3, 0, 3]), (1, [2, 0, 4, 2])];

fn j6_rhs_terms(corrected: bool) -> Vec<(i64, [u32; 4])> {
    let mut terms = moduli_forms::J6_RHS_RAW.to_vec();
    if corrected {
        for (c, e) in J6_FIX {
            let slot = terms.iter_mut().find(|(_, m)| *m == e).expect("monomial present");
            slot.0 -= c;
        }
    }
    terms
}

/// The linear form whose square gives J′4.
fn j4_inner<T: Ring>(m: [&T; 4]) -> T {
    let [a, b, c, d] = m;
    let abc = a.mul(b).mul(c);
    abc.sub(&a.mul(d).mul(b))
        .sub(&a.mul(d).mul(c))
        .add(&b.mul(c).mul(d))
        .add(&a.mul(d))
        .sub(&b.mul(c))
}

fn scale_of(k: usize) -> Rational {
    let (n, d) = moduli_forms::SCALES[k];
    ratio(n, d)
}

/// The closed-form J′2..J′6 in the moduli.
pub fn j_invariants_moduli(a: &Rational, b: &Rational, c: &Rational, d: &Rational) -> JInvariants {
    let m = [a.clone(), b.clone(), c.clone(), d.clone()];
    let inner = j4_inner([a, b, c, d]);
    JInvariants {
        j: [
            eval_table(&moduli_forms::J2_RHS, &m) * scale_of(0),
            eval_table(&moduli_forms::J3_RHS, &m) * scale_of(1),
            &inner * &inner * ratio(81, 16),
            eval_table(&moduli_forms::J5_RHS, &m) * scale_of(2),
            eval_table(&j6_rhs_terms(true), &m) * scale_of(3),
        ],
    }
}

/// J′6 from the uncorrected table; differs from J6 off a hypersurface.
pub fn j6_moduli_uncorrected(m: &[Rational; 4]) -> Rational {
    eval_table(&j6_rhs_terms(false), m) * scale_of(3)
}

/// J′2..J′6 as polynomials in `Q[a, b, c, d]`.
pub fn j_moduli_polys() -> [MultiPoly; 5] {
    let vars: [MultiPoly; 4] = std::array::from_fn(|i| MultiPoly::var(4, i));
    let inner = j4_inner([&vars[0], &vars[1], &vars[2], &vars[3]]);
    [
        table_poly(&moduli_forms::J2_RHS).scale(&scale_of(0)),
        table_poly(&moduli_forms::J3_RHS).scale(&scale_of(1)),
        (&inner * &inner).scale(&ratio(81, 16)),
        table_poly(&moduli_forms::J5_RHS).scale(&scale_of(2)),
        table_poly(&j6_rhs_terms(true)).scale(&scale_of(3)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::configuration::Configuration;
    use sixlines_algebra::weighted_equal;

    fn golden() -> Configuration {
        Configuration::from_moduli(rat(2), rat(3), rat(4), rat(5))
    }

    #[test]
    fn golden_satake_and_j() {
        let d = golden().do_coordinates();
        let x = SatakeCoordinates::from_t(&d.t);
        assert_eq!(x.x, [15, -15, 6, 6, -15, 3].map(rat));
        assert_eq!(t_from_satake(&x.x), d.t);
        let s = x.power_sums();
        assert_eq!(s[1..].to_vec(), [756, -2916, 154548, -743580, 34265916].map(rat).to_vec());
        let j = j_invariants(&x).unwrap();
        assert_eq!(j, JInvariants::from_i64([63, -243, 729, -8748, -32076]));
        let back = power_sums_from_j(&j.j);
        assert_eq!(back.to_vec(), s[3..].to_vec());
    }

    #[test]
    fn zero_and_invalid_inputs() {
        let x = SatakeCoordinates { x: std::array::from_fn(|_| rat(0)) };
        assert_eq!(j_invariants(&x).unwrap(), JInvariants::from_i64([0; 5]));
        let bad = SatakeCoordinates { x: [1, 0, 0, 0, 0, 0].map(rat) };
        assert!(j_invariants(&bad).is_err());
    }

    #[test]
    fn golden_sextic() {
        let j = JInvariants::from_i64([63, -243, 729, -8748, -32076]);
        let sx = satake_sextic(&j);
        assert_eq!(sx.b, UniPoly::from_i64(&[486, -189, 0, 1]));
        assert_eq!(sx.a, UniPoly::from_i64(&[-32076, 8748, 729]));
        for x in [15, -15, 6, 6, -15, 3] {
            assert!(sx.s.eval(&rat(x)).is_zero());
        }
        let zero = satake_sextic(&JInvariants::from_i64([0; 5]));
        assert_eq!(zero.s, UniPoly::monomial(rat(1), 6));
        assert!(zero.a.is_zero());
    }

    #[test]
    fn golden_derived() {
        let j = JInvariants::from_i64([63, -243, 729, -8748, -32076]);
        let d = derived_invariants(&j);
        assert_eq!(d.disc_a, rat(170061120));
        assert!(d.disc_s.is_zero());
        assert_eq!(d.res_ab, res_ab_closed_form(&j.j));
        let t = golden().do_coordinates().t;
        assert_eq!(disc_a_product(&t), rat(170061120));
        let flags = stratum_from_invariants(&j, &d);
        assert!(flags.valid && !flags.tangent && !flags.concurrent && flags.disc_s_component);
        let j5 = JInvariants::from_i64([1, 2, 0, 0, 7]);
        assert!(derived_invariants(&j5).disc_a.is_zero());
        let bad = JInvariants::from_i64([1, 0, 0, 0, 7]);
        assert!(!bad.is_valid());
    }

    #[test]
    fn moduli_forms_golden() {
        let j = j_invariants_moduli(&rat(2), &rat(3), &rat(4), &rat(5));
        assert_eq!(j, JInvariants::from_i64([63, -243, 729, -8748, -32076]));
        let m = [2, 3, 4, 5].map(rat);
        assert_eq!(j6_moduli_uncorrected(&m), rat(370899));
        let _ = j_invariants_moduli(&rat(1), &rat(1), &rat(1), &rat(1));
    }

    #[test]
    fn uncorrected_j6_residual() {
        // The raw table exceeds J6 by (81/16)·a²d²(2ab³d + c⁴).
        for m in [[3, -2, 5, 7], [1, 4, -1, 2]] {
            let q = m.map(rat);
            let j = j_invariants_moduli(&q[0], &q[1], &q[2], &q[3]);
            let extra = ratio(81, 16)
                * q[0].powu(2)
                * q[3].powu(2)
                * (rat(2) * &q[0] * q[1].powu(3) * &q[3] + q[2].powu(4));
            assert_eq!(j6_moduli_uncorrected(&q) - j.j6(), extra);
        }
    }

    #[test]
    fn tangent_has_j4_zero() {
        let c = Configuration::from_rosenhain(rat(2), rat(3), rat(5)).unwrap();
        let j = configuration_j(&c);
        assert!(j.j4().is_zero());
        let d = derived_invariants(&j);
        assert!(stratum_from_invariants(&j, &d).tangent);
    }

    #[test]
    fn res_ab_with_j4_zero() {
        for j in [[1, 2, 0, 3, 5], [-4, 1, 0, -2, 7], [0, 0, 0, 1, 0]] {
            let j = JInvariants::from_i64(j);
            assert_eq!(derived_invariants(&j).res_ab, res_ab_closed_form(&j.j));
        }
    }

    #[test]
    fn swapped_lines_same_point() {
        let c = golden();
        let j = configuration_j(&c);
        let p = configuration_j(&c.permute(&[2, 1, 3, 4, 5, 6]).unwrap());
        assert_eq!(j, p);
        let r = configuration_j(&c.rescale_line(3, &rat(5)).unwrap());
        assert!(weighted_equal(&j.weighted_point().unwrap(), &r.weighted_point().unwrap()).unwrap());
    }
}
