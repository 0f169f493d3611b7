use num_traits::{One, Zero};
use proptest::prelude::*;
use sixlines_algebra::rational::{rat, ratio};
use sixlines_algebra::roots::rational_roots;
use sixlines_algebra::unipoly::{
    discriminant, gcd_free_basis, poly_gcd, resultant_subresultant, resultant_sylvester, squarefree_decompose,
    squarefree_part,
};
use sixlines_algebra::{weighted_equal, Field, MultiPoly, QuadExt, Rational, UniPoly, WeightedPoint};

fn poly(max_deg: usize) -> impl Strategy<Value = UniPoly<Rational>> {
    prop::collection::vec(-6i64..=6, 0..=max_deg + 1).prop_map(|v| UniPoly::from_i64(&v))
}

fn nonzero_poly(max_deg: usize) -> impl Strategy<Value = UniPoly<Rational>> {
    poly(max_deg).prop_filter("nonzero", |p| !p.is_zero())
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=5).prop_map(|(n, d)| ratio(n, d))
}

fn from_roots(roots: &[Rational]) -> UniPoly<Rational> {
    roots.iter().fold(UniPoly::one(), |acc, r| &acc * &UniPoly::linear_root(r.clone()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(p in poly(5), q in poly(5), r in poly(5)) {
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p + &q) * &r, &(&p * &r) + &(&q * &r));
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&(&p - &p), &UniPoly::zero());
    }

    #[test]
    fn division_with_remainder(p in poly(7), d in nonzero_poly(4)) {
        let (q, r) = p.divrem(&d);
        prop_assert_eq!(&(&q * &d) + &r, p);
        prop_assert!(r.is_zero() || r.deg0() < d.deg0());
    }

    #[test]
    fn gcd_divides_and_absorbs(p in nonzero_poly(4), q in nonzero_poly(4), h in nonzero_poly(3)) {
        let g = poly_gcd(&p, &q);
        prop_assert!(g.divides(&p) && g.divides(&q));
        let gh = poly_gcd(&(&p * &h), &(&q * &h));
        prop_assert!(h.divides(&gh));
        prop_assert_eq!(gh, (&g * &h).monic());
    }

    #[test]
    fn squarefree_decomposition_reassembles(a in nonzero_poly(3), b in nonzero_poly(2), c in nonzero_poly(2)) {
        let p = &(&a * &b.pow(2)) * &c.pow(3);
        let parts = squarefree_decompose(&p).unwrap();
        let back = parts.iter().fold(UniPoly::one(), |acc, (q, k)| &acc * &q.pow(*k as u32));
        prop_assert_eq!(back, p.monic());
        for (i, (q, _)) in parts.iter().enumerate() {
            prop_assert_eq!(poly_gcd(q, &q.derivative()).deg0(), 0);
            for (r, _) in &parts[i + 1..] {
                prop_assert_eq!(poly_gcd(q, r).deg0(), 0);
            }
        }
        let ks: Vec<usize> = parts.iter().map(|(_, k)| *k).collect();
        prop_assert!(ks.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn gcd_free_basis_is_coprime_and_spans(inputs in prop::collection::vec(nonzero_poly(4), 1..4)) {
        let basis = gcd_free_basis(&inputs);
        for (i, b) in basis.iter().enumerate() {
            prop_assert!(b.deg0() > 0);
            prop_assert!(inputs.iter().any(|p| b.divides(p)));
            for c in &basis[i + 1..] {
                prop_assert_eq!(poly_gcd(b, c).deg0(), 0);
            }
        }
        // The elements dividing an input multiply to its radical.
        for p in &inputs {
            let product = basis.iter().filter(|b| b.divides(p)).fold(UniPoly::<Rational>::one(), |acc, b| &acc * b);
            prop_assert_eq!(product, squarefree_part(p).monic());
        }
    }

    #[test]
    fn discriminant_is_root_product(roots in prop::collection::vec(small_rational(), 2..6), lc in 1i64..4) {
        let p = from_roots(&roots).scale(&rat(lc));
        let n = roots.len() as u32;
        let mut prod = Rational::one();
        for i in 0..roots.len() {
            for j in i + 1..roots.len() {
                let d = &roots[i] - &roots[j];
                prod *= &d * &d;
            }
        }
        prop_assert_eq!(discriminant(&p).unwrap(), prod * rat(lc).powu(2 * n - 2));
    }

    #[test]
    fn resultant_algorithms_agree(p in nonzero_poly(5), q in nonzero_poly(5)) {
        prop_assert_eq!(resultant_sylvester(&p, &q), resultant_subresultant(&p, &q));
    }

    #[test]
    fn rational_roots_are_found(roots in prop::collection::vec(small_rational(), 1..5), extra in 2i64..5) {
        // x² − extra has no rational root for these values.
        let p = &from_roots(&roots) * &UniPoly::from_i64(&[-extra, 0, 1]);
        let found = rational_roots(&p);
        for r in &roots {
            prop_assert!(found.contains(r));
        }
        prop_assert!(found.iter().all(|r| p.eval(r).is_zero()));
    }

    #[test]
    fn quadratic_field_inverse_and_norm(a in -9i64..=9, b in -9i64..=9, c in -9i64..=9, d in -9i64..=9, k in prop::sample::select(vec![2i64, 3, 5, 7, -1, -3])) {
        let x = QuadExt::from_parts(a, b, k);
        let y = QuadExt::from_parts(c, d, k);
        prop_assert_eq!((x.clone() * &y).norm(), x.norm() * y.norm());
        if !x.is_zero() {
            prop_assert_eq!(x.clone() * &x.inv(), QuadExt::one());
        }
    }

    #[test]
    fn multivariate_evaluation_is_a_homomorphism(
        p in prop::collection::vec((-5i64..=5, 0u32..3, 0u32..3), 0..6),
        q in prop::collection::vec((-5i64..=5, 0u32..3, 0u32..3), 0..6),
        x in small_rational(),
        y in small_rational(),
    ) {
        let build = |ts: &[(i64, u32, u32)]| ts.iter().fold(MultiPoly::zero(2), |acc, &(c, i, j)| &acc + &MultiPoly::term(2, rat(c), vec![i, j]));
        let (p, q) = (build(&p), build(&q));
        let pt = [x, y];
        prop_assert_eq!((&p * &q).eval(&pt), p.eval(&pt) * q.eval(&pt));
        prop_assert_eq!((&p + &q).eval(&pt), p.eval(&pt) + q.eval(&pt));
        let ids = [MultiPoly::var(2, 0), MultiPoly::var(2, 1)];
        prop_assert_eq!(p.compose(&ids), p);
    }

    #[test]
    fn weighted_scaling_is_equality(coords in prop::collection::vec(small_rational(), 5), lambda in small_rational()) {
        prop_assume!(coords.iter().any(|c| !c.is_zero()) && !lambda.is_zero());
        let p = WeightedPoint::new(coords, vec![2, 3, 4, 5, 6]).unwrap();
        let q = p.scaled(&lambda);
        prop_assert!(weighted_equal(&p, &q).unwrap());
        prop_assert!(weighted_equal(&q, &p).unwrap());
    }

    #[test]
    fn weighted_perturbation_breaks_equality(coords in prop::collection::vec(1i64..9, 5), k in 0usize..5) {
        let p = WeightedPoint::new(coords.iter().map(|&c| rat(c)).collect(), vec![2, 3, 4, 5, 6]).unwrap();
        let mut moved = p.coords.clone();
        moved[k] = &moved[k] + &Rational::one();
        let q = WeightedPoint::new(moved, p.weights.clone()).unwrap();
        prop_assert!(!weighted_equal(&p, &q).unwrap());
    }
}

#[test]
fn weighted_equality_over_quadratic_scaling() {
    // λ = √2 scales odd weights by irrational factors.
    let p = WeightedPoint::new((1..=5).map(|i| QuadExt::rational(rat(i))).collect(), vec![2, 3, 4, 5, 6]).unwrap();
    let s = QuadExt::sqrt_of(&2.into()).unwrap();
    assert!(weighted_equal(&p, &p.scaled(&s)).unwrap());
}
