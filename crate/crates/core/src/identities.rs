//! Mechanical verification of the polynomial identities among the
//! coordinates and invariants, symbolically in `Q[a, b, c, d]` where
//! feasible and at seeded random points otherwise.

use crate::check::Check;
use crate::configuration::{
    do_coordinates_of, linear_value, moduli_closed_forms, moduli_columns, r_squared_expression, Configuration,
    LINEAR_RELATIONS,
};
use crate::invariants::{
    configuration_j, derived_invariants, disc_a_product, disc_s_product, j_moduli_polys, j_from_power_sums,
    j_invariants_moduli, power_sums, res_ab_closed_form, satake_from_t, JInvariants, SatakeCoordinates,
};
use crate::sample;
use sixlines_algebra::rational::{rat, ratio};
use sixlines_algebra::{MultiPoly, Rational};

fn moduli_vars() -> [MultiPoly; 4] {
    std::array::from_fn(|i| MultiPoly::var(4, i))
}

/// `t` and `R` in `Q[a, b, c, d]` from the 3×3 minors.
pub fn symbolic_do_coordinates() -> ([MultiPoly; 10], MultiPoly) {
    let v = moduli_vars();
    let cols = moduli_columns(&MultiPoly::zero(4), &MultiPoly::one(4), [&v[0], &v[1], &v[2], &v[3]]);
    do_coordinates_of(&cols)
}

/// J2..J6 in `Q[a, b, c, d]` along closed-form t → Satake → power sums.
pub fn symbolic_moduli_j() -> [MultiPoly; 5] {
    let v = moduli_vars();
    let (t, _) = moduli_closed_forms(&MultiPoly::one(4), [&v[0], &v[1], &v[2], &v[3]]);
    j_from_power_sums(&power_sums(&satake_from_t(&t)))
}

fn zero_check(name: &str, p: &MultiPoly) -> Check {
    Check::new(name, p.is_zero(), format!("{} residual terms", p.terms().count()))
}

/// The closed forms in the moduli against the t-route. J2..J4 are compared as
/// polynomials, J5 and J6 at `samples` random moduli.
pub fn moduli_j_identity(samples: usize, seed: u64) -> Vec<Check> {
    let sym = symbolic_moduli_j();
    let app = j_moduli_polys();
    let mut out: Vec<Check> = (0..3)
        .map(|k| zero_check(&format!("moduli-form-j{}-polynomial", k + 2), &(&sym[k] - &app[k])))
        .collect();
    let mut rng = sample::rng(seed);
    let mut bad = [0usize; 2];
    for _ in 0..samples {
        let m = sample::moduli(&mut rng);
        let c = Configuration::from_moduli(m[0].clone(), m[1].clone(), m[2].clone(), m[3].clone());
        let j = configuration_j(&c);
        let a = j_invariants_moduli(&m[0], &m[1], &m[2], &m[3]);
        for (n, k) in [3, 4].into_iter().enumerate() {
            if j.j[k] != a.j[k] {
                bad[n] += 1;
            }
        }
    }
    for (n, k) in [5, 6].into_iter().enumerate() {
        out.push(Check::new(
            format!("moduli-form-j{k}-sampled"),
            bad[n] == 0,
            format!("{} of {samples} points differ", bad[n]),
        ));
    }
    out
}

/// Determinant and closed-form coordinates agree, the fifteen linear
/// relations and the quartic relation for `R²` hold, `R² = 2⁴3⁻⁴ J4`, and
/// `J5² − 4 J4 J6 = 2⁻⁴3¹⁰ Π t_i`, all in `Q[a, b, c, d]`.
pub fn coordinate_identities() -> Vec<Check> {
    let (t, r) = symbolic_do_coordinates();
    let v = moduli_vars();
    let (tc, rc) = moduli_closed_forms(&MultiPoly::one(4), [&v[0], &v[1], &v[2], &v[3]]);
    let same = t.iter().zip(&tc).all(|(x, y)| x == y) && r == rc;
    let mut out = vec![Check::new("minors-match-closed-forms", same, "t_1..t_10 and R")];
    for (n, row) in LINEAR_RELATIONS.iter().enumerate() {
        out.push(zero_check(&format!("linear-relation-{}", n + 1), &linear_value(row, &t)));
    }
    let r2 = &r * &r;
    out.push(zero_check("r-squared-quartic", &(&r2 - &r_squared_expression(&t))));
    let j = j_from_power_sums(&power_sums(&satake_from_t(&t)));
    out.push(zero_check("r-squared-is-j4", &(&r2 - &j[2].scale(&ratio(16, 81)))));
    let disc_a = &(&j[3] * &j[3]) - &(&j[2] * &j[4]).scale(&rat(4));
    out.push(zero_check("disc-a-product", &(&disc_a - &disc_a_product(&t))));
    out
}

/// `Disc(S)` from the resultant algorithm against `3³⁰ Π (t_i − t_j)²`.
pub fn disc_s_identity(samples: usize, seed: u64) -> Check {
    let mut rng = sample::rng(seed);
    let mut bad = Vec::new();
    for _ in 0..samples {
        let m = sample::moduli(&mut rng);
        let c = Configuration::from_moduli(m[0].clone(), m[1].clone(), m[2].clone(), m[3].clone());
        let t = c.do_coordinates().t;
        let d = derived_invariants(&configuration_j(&c));
        if d.disc_s != disc_s_product(&t) {
            bad.push(format!("{m:?}"));
        }
    }
    Check::new(
        "disc-s-factorization",
        bad.is_empty(),
        format!("{} of {samples} points differ", bad.len()) + &bad.iter().map(|m| format!(" {m}")).collect::<String>(),
    )
}

/// `Res(A, B)` from the Sylvester matrix against its closed form.
pub fn res_ab_identity(samples: usize, seed: u64) -> Check {
    let mut rng = sample::rng(seed);
    let mut bad = 0;
    for _ in 0..samples {
        let j = JInvariants::new(std::array::from_fn(|_| sample::rational(&mut rng, 20)));
        if derived_invariants(&j).res_ab != res_ab_closed_form(&j.j) {
            bad += 1;
        }
    }
    Check::new("res-ab-closed-form", bad == 0, format!("{bad} of {samples} points differ"))
}

pub const GOLDEN_MODULI: [i64; 4] = [2, 3, 4, 5];
pub const GOLDEN_T: [i64; 10] = [8, 1, 1, 8, 9, 5, 2, 2, -2, -2];
pub const GOLDEN_R: i64 = -12;
pub const GOLDEN_SATAKE: [i64; 6] = [15, -15, 6, 6, -15, 3];
pub const GOLDEN_J: [i64; 5] = [63, -243, 729, -8748, -32076];
pub const GOLDEN_DISC_A: i64 = 170061120;

/// Every golden quantity by two independent routes, each compared with the
/// expected value.
pub fn golden_example() -> Vec<Check> {
    let m = GOLDEN_MODULI.map(rat);
    let c = Configuration::from_moduli(m[0].clone(), m[1].clone(), m[2].clone(), m[3].clone());
    let det = c.do_coordinates();
    let (t_cf, r_cf) = moduli_closed_forms(&rat(1), [&m[0], &m[1], &m[2], &m[3]]);
    let t_want = GOLDEN_T.map(rat);
    let x_det = SatakeCoordinates::from_t(&det.t).x;
    let x_cf = satake_from_t(&t_cf);
    let j_det = configuration_j(&c);
    let j_cf = j_invariants_moduli(&m[0], &m[1], &m[2], &m[3]);
    let j_want = JInvariants::from_i64(GOLDEN_J);
    let da_j = &j_det.j[3] * &j_det.j[3] - rat(4) * &j_det.j[2] * &j_det.j[4];
    let da_t = disc_a_product(&det.t);
    let da_want = rat(GOLDEN_DISC_A);
    let show = |v: &[Rational]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
    vec![
        Check::new("golden-t", det.t == t_want && t_cf == t_want, format!("[{}]", show(&det.t))),
        Check::new("golden-r", det.r == rat(GOLDEN_R) && r_cf == rat(GOLDEN_R), format!("{}", det.r)),
        Check::new(
            "golden-satake",
            x_det == GOLDEN_SATAKE.map(rat) && x_cf == x_det,
            format!("[{}]", show(&x_det)),
        ),
        Check::new("golden-j", j_det == j_want && j_cf == j_want, format!("[{}]", show(&j_det.j))),
        Check::new("golden-disc-a", da_j == da_want && da_t == da_want, format!("{da_j}")),
    ]
}

/// All 720 permutations of `0..6`.
pub fn permutations6() -> Vec<[usize; 6]> {
    fn go(prefix: &mut Vec<usize>, out: &mut Vec<[usize; 6]>) {
        if prefix.len() == 6 {
            out.push(std::array::from_fn(|i| prefix[i]));
            return;
        }
        for k in 0..6 {
            if !prefix.contains(&k) {
                prefix.push(k);
                go(prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::with_capacity(720);
    go(&mut Vec::new(), &mut out);
    out
}

/// J is unchanged, exactly, under every reordering of the lines.
pub fn s6_invariance(c: &Configuration) -> Check {
    let j = configuration_j(c);
    let perms = permutations6();
    let bad = perms
        .iter()
        .filter(|p| {
            let sigma = p.map(|i| i + 1);
            configuration_j(&c.permute(&sigma).expect("permutation")) != j
        })
        .count();
    Check::new("j-invariant-under-line-permutations", bad == 0, format!("{bad} of {} permutations differ", perms.len()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::check::all_passed;

    #[test]
    fn golden() {
        assert!(all_passed(&golden_example()));
    }

    #[test]
    fn symbolic_coordinates() {
        let checks = coordinate_identities();
        assert_eq!(checks.len(), 19);
        assert!(all_passed(&checks), "{checks:?}");
    }

    #[test]
    fn moduli_forms_small() {
        assert!(all_passed(&moduli_j_identity(10, 3)));
    }

    #[test]
    fn permutation_count() {
        let p = permutations6();
        assert_eq!(p.len(), 720);
        let set: std::collections::BTreeSet<_> = p.into_iter().collect();
        assert_eq!(set.len(), 720);
    }

    #[test]
    fn sampled_discriminants() {
        assert!(disc_s_identity(5, 1).passed);
        assert!(res_ab_identity(5, 1).passed);
    }
}
