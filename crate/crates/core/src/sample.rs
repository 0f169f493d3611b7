//! Seeded random inputs for the sampled checks.

use crate::configuration::{Configuration, StratumKind};
use crate::invariants::{configuration_j, derived_invariants, stratum_from_invariants, JInvariants};
use crate::isogeny::QuarticParams;
use crate::fibration::ConfluenceRow;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sixlines_algebra::Rational;

pub const DEFAULT_SEED: u64 = 20190708;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `p/q` with `|p| ≤ bound` and `1 ≤ q ≤ bound`.
pub fn rational<R: Rng>(rng: &mut R, bound: i64) -> Rational {
    let p = rng.gen_range(-bound..=bound);
    let q = rng.gen_range(1..=bound);
    Rational::new(p.into(), q.into())
}

pub fn nonzero_rational<R: Rng>(rng: &mut R, bound: i64) -> Rational {
    loop {
        let r = rational(rng, bound);
        if !r.is_zero() {
            return r;
        }
    }
}

pub fn moduli<R: Rng>(rng: &mut R) -> [Rational; 4] {
    std::array::from_fn(|_| rational(rng, 12))
}

/// Moduli whose configuration is in general position and whose J-point lies
/// on none of the special loci.
pub fn generic_moduli<R: Rng>(rng: &mut R) -> [Rational; 4] {
    loop {
        let m = moduli(rng);
        let c = Configuration::from_moduli(m[0].clone(), m[1].clone(), m[2].clone(), m[3].clone());
        if c.classify_refined().kind != StratumKind::Generic {
            continue;
        }
        let j = configuration_j(&c);
        let flags = stratum_from_invariants(&j, &derived_invariants(&j));
        if ConfluenceRow::from_flags(&flags) == Some(ConfluenceRow::Generic) {
            return m;
        }
    }
}

/// Three distinct Rosenhain parameters avoiding 0 and 1.
pub fn rosenhain<R: Rng>(rng: &mut R) -> [Rational; 3] {
    loop {
        let l: [Rational; 3] = std::array::from_fn(|_| nonzero_rational(rng, 9));
        let bad = l.iter().any(|x| x.is_one()) || l[0] == l[1] || l[0] == l[2] || l[1] == l[2];
        if !bad {
            return l;
        }
    }
}

/// Parameters with `(γ, δ) ≠ (0, 0)` and `(ε, ζ) ≠ (0, 0)`.
pub fn quartic_params<R: Rng>(rng: &mut R) -> QuarticParams {
    loop {
        let v: [Rational; 6] = std::array::from_fn(|_| rational(rng, 9));
        let [a, b, c, d, e, z] = v;
        let p = QuarticParams::new(a, b, c, d, e, z);
        if p.is_polarized() {
            return p;
        }
    }
}

/// J-points from random moduli, skipping the few that are not valid.
pub fn valid_j<R: Rng>(rng: &mut R) -> JInvariants {
    loop {
        let m = moduli(rng);
        let c = Configuration::from_moduli(m[0].clone(), m[1].clone(), m[2].clone(), m[3].clone());
        let j = configuration_j(&c);
        if j.is_valid() && !(j.j4().is_zero() && j.j5().is_zero() && j.j6().is_zero()) {
            return j;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic() {
        let a: Vec<_> = (0..5).map(|_| ()).scan(rng(7), |r, _| Some(rational(r, 100))).collect();
        let b: Vec<_> = (0..5).map(|_| ()).scan(rng(7), |r, _| Some(rational(r, 100))).collect();
        assert_eq!(a, b);
    }

    #[test]
    fn generic_is_generic() {
        let mut r = rng(1);
        let m = generic_moduli(&mut r);
        let c = Configuration::from_moduli(m[0].clone(), m[1].clone(), m[2].clone(), m[3].clone());
        assert_eq!(c.classify().kind, StratumKind::Generic);
    }
}
