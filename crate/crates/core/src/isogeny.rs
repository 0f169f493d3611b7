//! The quartic family, its van Geemen-Sarti involutions and two-isogenies,
//! and the correspondence between quartic parameters and J-invariants.

use crate::check::Check;
use crate::error::precondition;
use crate::fibration::{x_alternate, x_alternate_ab, x_alternate_dual_fg, x_standard_fg, y_alternate, ModelLabel, WeierstrassModel};
use crate::invariants::JInvariants;
use crate::CoreError;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use sixlines_algebra::rational::{ratio, sqrt_exact};
use sixlines_algebra::{squarefree_core, weighted_equal, Field, MultiPoly, QuadExt, RatFunc, Rational, UniPoly, WeightedPoint};

/// Coefficients (α, β, γ, δ, ε, ζ) of the quartic surface.
#[derive(Clone, Debug, PartialEq)]
pub struct QuarticParams<F = Rational> {
    pub alpha: F,
    pub beta: F,
    pub gamma: F,
    pub delta: F,
    pub epsilon: F,
    pub zeta: F,
}

impl<F: Field> QuarticParams<F> {
    pub fn new(alpha: F, beta: F, gamma: F, delta: F, epsilon: F, zeta: F) -> Self {
        QuarticParams { alpha, beta, gamma, delta, epsilon, zeta }
    }

    pub fn from_i64(v: [i64; 6]) -> Self {
        let [a, b, c, d, e, z] = v.map(F::from_i64);
        Self::new(a, b, c, d, e, z)
    }

    pub fn as_array(&self) -> [&F; 6] {
        [&self.alpha, &self.beta, &self.gamma, &self.delta, &self.epsilon, &self.zeta]
    }

    /// (γ, δ) ≠ (0, 0) and (ε, ζ) ≠ (0, 0).
    pub fn is_polarized(&self) -> bool {
        !(self.gamma.is_zero() && self.delta.is_zero())
            && !(self.epsilon.is_zero() && self.zeta.is_zero())
    }

    pub fn check_polarized(&self) -> Result<(), CoreError> {
        if self.gamma.is_zero() && self.delta.is_zero() {
            return Err(precondition("(gamma, delta) must not both vanish"));
        }
        if self.epsilon.is_zero() && self.zeta.is_zero() {
            return Err(precondition("(epsilon, zeta) must not both vanish"));
        }
        Ok(())
    }
}

impl<F: Field> QuarticParams<F> {
    /// Swap symmetry: `(α, β, γ, δ, ε, ζ) ↦ (α, β, ε, ζ, γ, δ)`.
    pub fn swapped(&self) -> Self {
        Self::new(
            self.alpha.clone(),
            self.beta.clone(),
            self.epsilon.clone(),
            self.zeta.clone(),
            self.gamma.clone(),
            self.delta.clone(),
        )
    }

    /// `(t²α, t³β, t⁵γ, t⁶δ, ε/t, ζ)`.
    pub fn weighted_rescale(&self, t: &F) -> Self {
        Self::new(
            t.powu(2) * &self.alpha,
            t.powu(3) * &self.beta,
            t.powu(5) * &self.gamma,
            t.powu(6) * &self.delta,
            self.epsilon.clone() / t,
            self.zeta.clone(),
        )
    }

    /// `(α, β, tγ, tδ, ε/t, ζ/t)`.
    pub fn pair_rescale(&self, t: &F) -> Self {
        Self::new(
            self.alpha.clone(),
            self.beta.clone(),
            t.clone() * &self.gamma,
            t.clone() * &self.delta,
            self.epsilon.clone() / t,
            self.zeta.clone() / t,
        )
    }
}

const QX: usize = 0;
const QY: usize = 1;
const QZ: usize = 2;
const QW: usize = 3;

fn mono<F: Field>(nvars: usize, c: F, e: &[(usize, u32)]) -> MultiPoly<F> {
    let mut exps = vec![0; nvars];
    for &(i, k) in e {
        exps[i] = k;
    }
    MultiPoly::term(nvars, c, exps)
}

/// The quartic in `X, Y, Z, W` (variables 0..4 of `nvars`):
/// `Y²ZW − 4X³Z + 3αXZW² + βZW³ + γXZ²W − ½(δZ²W² + ζW⁴) + εXW³`.
pub fn quartic_poly_in<F: Field>(p: &QuarticParams<F>, nvars: usize) -> MultiPoly<F> {
    let k = |n: i64| F::from_i64(n);
    let half = F::from_rational(ratio(-1, 2));
    let terms = [
        mono(nvars, k(1), &[(QY, 2), (QZ, 1), (QW, 1)]),
        mono(nvars, k(-4), &[(QX, 3), (QZ, 1)]),
        mono(nvars, k(3) * &p.alpha, &[(QX, 1), (QZ, 1), (QW, 2)]),
        mono(nvars, p.beta.clone(), &[(QZ, 1), (QW, 3)]),
        mono(nvars, p.gamma.clone(), &[(QX, 1), (QZ, 2), (QW, 1)]),
        mono(nvars, half.clone() * &p.delta, &[(QZ, 2), (QW, 2)]),
        mono(nvars, half * &p.zeta, &[(QW, 4)]),
        mono(nvars, p.epsilon.clone(), &[(QX, 1), (QW, 3)]),
    ];
    terms.iter().fold(MultiPoly::zero(nvars), |acc, t| &acc + t)
}

pub fn quartic_poly<F: Field>(p: &QuarticParams<F>) -> MultiPoly<F> {
    quartic_poly_in(p, 4)
}

/// `[α : β : γε : γζ + δε : δζ]` in weighted projective space of weights 2..6.
pub fn moduli_match<F: Field>(p: &QuarticParams<F>) -> Result<WeightedPoint<F>, CoreError> {
    let coords = vec![
        p.alpha.clone(),
        p.beta.clone(),
        p.gamma.clone() * &p.epsilon,
        p.gamma.clone() * &p.zeta + p.delta.clone() * &p.epsilon,
        p.delta.clone() * &p.zeta,
    ];
    Ok(WeightedPoint::new(coords, vec![2, 3, 4, 5, 6])?)
}

/// The J-point of the parameters, with the coordinates of [`moduli_match`].
pub fn params_j<F: Field>(p: &QuarticParams<F>) -> JInvariants<F> {
    let c = moduli_match(p).expect("five weights").coords;
    JInvariants::new(std::array::from_fn(|i| c[i].clone()))
}

/// Quartic parameters solved from J-invariants, rational when possible.
#[derive(Clone, Debug, PartialEq)]
pub enum SolvedParams {
    Rational(QuarticParams<Rational>),
    Quadratic(QuarticParams<QuadExt>),
}

impl SolvedParams {
    /// Square-free radicand `D` of the extension, if one was needed.
    pub fn radicand(&self) -> Option<BigInt> {
        match self {
            SolvedParams::Rational(_) => None,
            SolvedParams::Quadratic(p) => p.as_array().iter().find_map(|c| c.radicand().cloned()),
        }
    }

    /// Whether the parameters give back `j` as a weighted point.
    pub fn matches(&self, j: &JInvariants) -> Result<bool, CoreError> {
        let jp = j.weighted_point()?;
        Ok(match self {
            SolvedParams::Rational(p) => weighted_equal(&moduli_match(p)?, &jp)?,
            SolvedParams::Quadratic(p) => {
                let lifted = WeightedPoint::new(
                    jp.coords.iter().cloned().map(QuadExt::rational).collect(),
                    jp.weights.clone(),
                )?;
                weighted_equal(&moduli_match(p)?, &lifted)?
            }
        })
    }
}

/// Inverts [`moduli_match`]: `α = J2`, `β = J3`, and `(γ, δ, ε, ζ)` split
/// `J4 t² − J5 t + J6 = (γt − δ)(εt − ζ)`. When `J4 ≠ 0`, `ε = 1`, `γ = J4` and
/// `ζ` is the root `(J5 + √Disc)/(2 J4)` of `J4 ζ² − J5 ζ + J6`, adjoining
/// `√D` for the square-free core `D` of the discriminant if needed.
pub fn solve_params(j: &JInvariants) -> Result<SolvedParams, CoreError> {
    if !j.is_valid() {
        return Err(precondition("(J3, J4, J5) must not all vanish"));
    }
    let [j2, j3, j4, j5, j6] = j.j.clone();
    let one = Rational::one();
    let zero = Rational::zero();
    if !j4.is_zero() {
        let disc = &j5 * &j5 - Rational::from_integer(4.into()) * &j4 * &j6;
        if let Some(r) = sqrt_exact(&disc) {
            let zeta = (&j5 + r) / (Rational::from_integer(2.into()) * &j4);
            let delta = &j5 - &j4 * &zeta;
            return Ok(SolvedParams::Rational(QuarticParams::new(j2, j3, j4, delta, one, zeta)));
        }
        // √(n/d) = k√D / d with n·d = k²·D.
        let nd = disc.numer() * disc.denom();
        let (core, k) = squarefree_core(&nd);
        let root = QuadExt::new(zero, Rational::new(k, disc.denom().clone()), &core)?;
        let q = QuadExt::rational;
        let zeta = (q(j5.clone()) + root) / q(Rational::from_integer(2.into()) * &j4);
        let delta = q(j5) - q(j4.clone()) * &zeta;
        return Ok(SolvedParams::Quadratic(QuarticParams::new(q(j2), q(j3), q(j4), delta, q(one), zeta)));
    }
    if !j5.is_zero() {
        let zeta = &j6 / &j5;
        return Ok(SolvedParams::Rational(QuarticParams::new(j2, j3, zero, j5, one, zeta)));
    }
    if j6.is_zero() {
        return Err(precondition("J4 = J5 = J6 = 0 admits no polarized parameters"));
    }
    Ok(SolvedParams::Rational(QuarticParams::new(j2, j3, zero.clone(), one, zero, j6)))
}

/// Y-model `Y² = X(X² − 2BX + B² − 4A)` obtained from an X-alternate model by
/// the fiberwise two-isogeny.
pub fn isogenous_y_model<F: Field>(x_alt: &WeierstrassModel<F>) -> Result<WeierstrassModel<F>, CoreError> {
    if x_alt.label != ModelLabel::XAlternate {
        return Err(precondition("expected an x-alt model"));
    }
    let (b, a) = (&x_alt.a2, &x_alt.a4);
    let a2 = b.scale(&F::from_i64(-2));
    let a4 = &(b * b) - &a.scale(&F::from_i64(4));
    WeierstrassModel::new(a2, a4, UniPoly::zero(), ModelLabel::YAlternate)
}

/// `y_alternate(J)` equals the isogenous image of `x_alternate(solve_params(J))`.
pub fn isogeny_round_trip(j: &JInvariants) -> Result<Check, CoreError> {
    let y = y_alternate(j)?;
    let same = match solve_params(j)? {
        SolvedParams::Rational(p) => isogenous_y_model(&x_alternate(&p)?)? == y,
        SolvedParams::Quadratic(p) => {
            let pushed = isogenous_y_model(&x_alternate(&p)?)?;
            let lift = |u: &UniPoly<Rational>| u.map(|c| QuadExt::rational(c.clone()));
            pushed.a2 == lift(&y.a2) && pushed.a4 == lift(&y.a4) && pushed.a6 == lift(&y.a6)
        }
    };
    Ok(Check::new("isogenous-model-matches-y-alternate", same, ""))
}

/// A point of a fiber over `t`; `xy = None` is the zero section.
#[derive(Clone, Debug, PartialEq)]
pub struct FiberPoint<F = Rational> {
    pub t: F,
    pub xy: Option<(F, F)>,
}

impl<F: Field> FiberPoint<F> {
    pub fn affine(t: F, x: F, y: F) -> Self {
        FiberPoint { t, xy: Some((x, y)) }
    }

    pub fn infinity(t: F) -> Self {
        FiberPoint { t, xy: None }
    }

    fn with(&self, xy: Option<(F, F)>) -> Self {
        FiberPoint { t: self.t.clone(), xy }
    }
}

/// Whether `p` lies on `y² = x(x² + bx + a)` (the zero section always does).
pub fn on_curve<F: Field>(a: &UniPoly<F>, b: &UniPoly<F>, p: &FiberPoint<F>) -> bool {
    match &p.xy {
        None => true,
        Some((x, y)) => {
            let rhs = x.clone() * &(x.clone() * x + b.eval(&p.t) * x + a.eval(&p.t));
            y.clone() * y == rhs
        }
    }
}

/// `(A, B) ↦ (B² − 4A, −2B)`: the coefficients of the isogenous curve.
pub fn isogenous_coefficients<F: Field>(a: &UniPoly<F>, b: &UniPoly<F>) -> (UniPoly<F>, UniPoly<F>) {
    (&(b * b) - &a.scale(&F::from_i64(4)), b.scale(&F::from_i64(-2)))
}

/// Translation by `(0, 0)` on `y² = x(x² + Bx + A)`:
/// `(x, y) ↦ (A/x, −Ay/x²)`, swapping the zero section and `(0, 0)`.
pub fn vgs_involution_x<F: Field>(a: &UniPoly<F>, p: &FiberPoint<F>) -> FiberPoint<F> {
    match &p.xy {
        None => p.with(Some((F::zero(), F::zero()))),
        Some((x, _)) if x.is_zero() => p.with(None),
        Some((x, y)) => {
            let at = a.eval(&p.t);
            let x2 = x.clone() * x;
            p.with(Some((at.clone() / x, -(at * y) / &x2)))
        }
    }
}

/// Translation by `(0, 0)` on `Y² = X(X² − 2BX + B² − 4A)`.
pub fn vgs_involution_y<F: Field>(a: &UniPoly<F>, b: &UniPoly<F>, p: &FiberPoint<F>) -> FiberPoint<F> {
    let (a2, _) = isogenous_coefficients(a, b);
    vgs_involution_x(&a2, p)
}

/// `(x, y) ↦ (y²/x², (x² − A) y / x²)`; the kernel `{∞, (0, 0)}` maps to ∞.
pub fn isogeny_phi_hat<F: Field>(a: &UniPoly<F>, p: &FiberPoint<F>) -> FiberPoint<F> {
    match &p.xy {
        Some((x, y)) if !x.is_zero() => {
            let x2 = x.clone() * x;
            let big_x = y.clone() * y / &x2;
            let big_y = (x2.clone() - a.eval(&p.t)) * y / &x2;
            p.with(Some((big_x, big_y)))
        }
        _ => p.with(None),
    }
}

/// `(X, Y) ↦ (Y²/(4X²), Y(X² − B² + 4A)/(8X²))`; `{∞, (0, 0)}` maps to ∞.
pub fn isogeny_phi<F: Field>(a: &UniPoly<F>, b: &UniPoly<F>, p: &FiberPoint<F>) -> FiberPoint<F> {
    match &p.xy {
        Some((bx, by)) if !bx.is_zero() => {
            let (at, bt) = (a.eval(&p.t), b.eval(&p.t));
            let x2 = bx.clone() * bx;
            let x = by.clone() * by / &(F::from_i64(4) * &x2);
            let y = by.clone() * &(x2.clone() - bt.clone() * &bt + F::from_i64(4) * &at) / &(F::from_i64(8) * &x2);
            p.with(Some((x, y)))
        }
        _ => p.with(None),
    }
}

// Symbolic suite over Q[x, y, A, B]: A and B are indeterminates.
const SX: usize = 0;
const SY: usize = 1;
const SA: usize = 2;
const SB: usize = 3;

type Sym = RatFunc<Rational>;

fn sv(i: usize) -> Sym {
    RatFunc::var(4, i)
}

fn sc(n: i64) -> Sym {
    RatFunc::constant(4, Rational::from_integer(n.into()))
}

/// `x(x² + bx + a)` for symbolic `a, b` and variable `x`.
fn sym_cubic(x: &Sym, a: &Sym, b: &Sym) -> Sym {
    let quad = &(&(x * x) + &(b * x)) + a;
    x * &quad
}

/// Normal-form right-hand side `y² = x³ + Bx² + Ax` in the symbolic ring.
fn x_relation() -> MultiPoly {
    sym_cubic(&sv(SX), &sv(SA), &sv(SB)).num
}

/// `(B² − 4A, −2B)` symbolically.
fn sym_isogenous(a: &Sym, b: &Sym) -> (Sym, Sym) {
    (&(b * b) - &(&sc(4) * a), &sc(-2) * b)
}

fn y_relation() -> MultiPoly {
    let (a2, b2) = sym_isogenous(&sv(SA), &sv(SB));
    sym_cubic(&sv(SX), &a2, &b2).num
}

fn sym_phi_hat(x: &Sym, y: &Sym, a: &Sym) -> (Sym, Sym) {
    let x2 = x * x;
    (&(y * y) / &x2, &(&(&x2 - a) * y) / &x2)
}

fn sym_phi(bx: &Sym, by: &Sym, a: &Sym, b: &Sym) -> (Sym, Sym) {
    let x2 = bx * bx;
    let x = &(by * by) / &(&sc(4) * &x2);
    let y = &(by * &(&(&x2 - &(b * b)) + &(&sc(4) * a))) / &(&sc(8) * &x2);
    (x, y)
}

fn sym_involution(x: &Sym, y: &Sym, a: &Sym) -> (Sym, Sym) {
    (a / x, &(&-a * y) / &(x * x))
}

/// Tangent doubling on `y² = x(x² + bx + a)`.
fn sym_double(x: &Sym, y: &Sym, a: &Sym, b: &Sym) -> (Sym, Sym) {
    let slope_num = &(&(&sc(3) * &(x * x)) + &(&(&sc(2) * b) * x)) + a;
    let lambda = &slope_num / &(&sc(2) * y);
    let x2 = &(&(&lambda * &lambda) - b) - &(&sc(2) * x);
    let y2 = -&(&(&lambda * &(&x2 - x)) + y);
    (x2, y2)
}

/// `(x, y)` lies on `y² = x(x² + bx + a)` modulo the relation of the source curve.
fn sym_on_curve(img: &(Sym, Sym), a: &Sym, b: &Sym, rel: &MultiPoly) -> bool {
    let lhs = &img.1 * &img.1;
    lhs.equal_mod_square(&sym_cubic(&img.0, a, b), SY, rel)
}

fn sym_same(p: &(Sym, Sym), q: &(Sym, Sym), rel: &MultiPoly) -> bool {
    p.0.equal_mod_square(&q.0, SY, rel) && p.1.equal_mod_square(&q.1, SY, rel)
}

/// The two-isogeny identities with `A`, `B` indeterminate, each proved by
/// reduction modulo the curve equation.
pub fn isogeny_suite() -> Vec<Check> {
    let (x, y, a, b) = (sv(SX), sv(SY), sv(SA), sv(SB));
    let (a2, b2) = sym_isogenous(&a, &b);
    let xrel = x_relation();
    let yrel = y_relation();
    let pt = (x.clone(), y.clone());

    let hat = sym_phi_hat(&x, &y, &a);
    let phi = sym_phi(&x, &y, &a, &b);
    let jx = sym_involution(&x, &y, &a);
    let jy = sym_involution(&x, &y, &a2);
    let phi_of_hat = sym_phi(&hat.0, &hat.1, &a, &b);
    let hat_of_phi = sym_phi_hat(&phi.0, &phi.1, &a);

    let mut out = vec![
        Check::new("phi-hat-image-on-y-curve", sym_on_curve(&hat, &a2, &b2, &xrel), ""),
        Check::new("phi-image-on-x-curve", sym_on_curve(&phi, &a, &b, &yrel), ""),
        Check::new("phi-after-phi-hat-is-doubling", sym_same(&phi_of_hat, &sym_double(&x, &y, &a, &b), &xrel), ""),
        Check::new("phi-hat-after-phi-is-doubling", sym_same(&hat_of_phi, &sym_double(&x, &y, &a2, &b2), &yrel), ""),
        Check::new("x-involution-on-x-curve", sym_on_curve(&jx, &a, &b, &xrel), ""),
        Check::new("y-involution-on-y-curve", sym_on_curve(&jy, &a2, &b2, &yrel), ""),
    ];
    let jjx = sym_involution(&jx.0, &jx.1, &a);
    let jjy = sym_involution(&jy.0, &jy.1, &a2);
    out.push(Check::new("x-involution-is-involutive", sym_same(&jjx, &pt, &xrel), ""));
    out.push(Check::new("y-involution-is-involutive", sym_same(&jjy, &pt, &yrel), ""));
    // Chord through (x, y) and (0, 0): slope y/x.
    let lam = &y / &x;
    let tx = &(&(&lam * &lam) - &b) - &x;
    let ty = -&(&(&lam * &(&tx - &x)) + &y);
    out.push(Check::new("x-involution-is-translation", sym_same(&jx, &(tx, ty), &xrel), ""));
    let hat_j = sym_phi_hat(&jx.0, &jx.1, &a);
    out.push(Check::new("phi-hat-invariant-under-x-involution", sym_same(&hat_j, &hat, &xrel), ""));
    let phi_j = sym_phi(&jy.0, &jy.1, &a, &b);
    out.push(Check::new("phi-invariant-under-y-involution", sym_same(&phi_j, &phi, &yrel), ""));
    out
}

/// Scaling and swap isomorphisms of the quartic, and their effect on moduli.
pub fn verify_symmetries<F: Field>(p: &QuarticParams<F>, t: &F) -> Result<Vec<Check>, CoreError> {
    if t.is_zero() {
        return Err(precondition("scaling parameter must be nonzero"));
    }
    p.check_polarized()?;
    // Variables X, Y, Z, W, q with q² = t.
    let n = 5;
    let q = MultiPoly::var(n, 4);
    let v = |i| MultiPoly::var(n, i);
    let images = [&q.pow(8) * &v(QX), &q.pow(9) * &v(QY), v(QZ), &q.pow(6) * &v(QW), q.clone()];
    let scaled = quartic_poly_in(&p.weighted_rescale(t), n).compose(&images);
    let reduced = scaled.reduce_square(4, &MultiPoly::constant(n, t.clone()));
    let expected = quartic_poly_in(p, n).scale(&t.powu(12));
    let mut out = vec![Check::new("scaling-isomorphism", reduced == expected, "")];

    let v4 = |i| MultiPoly::<F>::var(4, i);
    let swap_images = [&v4(QX) * &v4(QZ), &v4(QY) * &v4(QZ), v4(QW).pow(2), &v4(QZ) * &v4(QW)];
    let lhs = quartic_poly(p).compose(&swap_images);
    let rhs = &mono(4, F::one(), &[(QZ, 2), (QW, 2)]) * &quartic_poly(&p.swapped());
    out.push(Check::new("swap-isomorphism", lhs == rhs, ""));

    let base = moduli_match(p)?;
    let pair = moduli_match(&p.pair_rescale(t))?;
    out.push(Check::new("pair-rescaling-fixes-moduli", pair == base, ""));
    let weighted = moduli_match(&p.weighted_rescale(t))?;
    out.push(Check::new("scaling-fixes-moduli", weighted_equal(&weighted, &base)?, ""));
    let swapped = moduli_match(&p.swapped())?;
    out.push(Check::new("swap-fixes-moduli", swapped == base, ""));
    Ok(out)
}

/// The substitutions that project the quartic onto the X-standard and
/// X-alternate fibrations, and the base-fiber swap of the latter.
pub fn verify_projections<F: Field>(p: &QuarticParams<F>) -> Result<Vec<Check>, CoreError> {
    p.check_polarized()?;
    let k = |n: i64| F::from_i64(n);
    let n = 3;
    let v = |i| MultiPoly::<F>::var(n, i);
    let uni = |u: &UniPoly<F>| MultiPoly::from_univariate(u, n, 0);
    let quartic = quartic_poly(p);
    let mut out = Vec::new();

    // Variables s, x, y: X = −s x, Y = y, Z = 4s⁴, W = −4s³.
    let images = [
        (&v(0) * &v(1)).scale(&k(-1)),
        v(2),
        mono(n, k(4), &[(0, 4)]),
        mono(n, k(-4), &[(0, 3)]),
    ];
    let (f, g) = x_standard_fg(p);
    let weierstrass = &(&(&v(2).pow(2) - &v(1).pow(3)) - &(&uni(&f) * &v(1))) - &uni(&g);
    let expected = &mono(n, k(-16), &[(0, 7)]) * &weierstrass;
    out.push(Check::new("standard-projection", quartic.compose(&images) == expected, "X = -s x"));

    // Variables t, x, y: X = t x³, W = 2x³, Z = 2x²(ζ − εt), and Y² ↦ 2x⁴y².
    let z = &mono(n, k(2), &[(1, 2)]) * &MultiPoly::from_univariate(&UniPoly::new(vec![p.zeta.clone(), -p.epsilon.clone()]), n, 0);
    let images = [mono(n, F::one(), &[(0, 1), (1, 3)]), MultiPoly::zero(n), z, mono(n, k(2), &[(1, 3)])];
    let by_y = quartic.coefficients_in(QY);
    let y_sq = mono(n, k(2), &[(1, 4), (2, 2)]);
    let mut got = by_y[0].compose(&images);
    if by_y.len() > 2 {
        got = &got + &(&y_sq * &by_y[2].compose(&images));
    }
    let odd_y_free = by_y.get(1).is_none_or(|c| c.is_zero());
    let (a, b) = x_alternate_ab(p);
    let cubic = &v(1) * &(&(&v(1).pow(2) + &(&uni(&b) * &v(1))) + &uni(&a));
    let factor = &mono(n, k(-8), &[(1, 9)]) * &MultiPoly::from_univariate(&UniPoly::new(vec![-p.zeta.clone(), p.epsilon.clone()]), n, 0);
    let expected = &factor * &(&v(2).pow(2) - &cubic);
    out.push(Check::new("alternate-projection", odd_y_free && got == expected, ""));

    // Variables T, X, Y: x = T, y = Y/T², t = (X − γεT/3)/T².
    let r = |q: MultiPoly<F>| RatFunc::poly(q);
    let t2 = r(mono(n, F::one(), &[(0, 2)]));
    let ge = F::from_rational(ratio(1, 3)) * &p.gamma * &p.epsilon;
    let t_img = &r(&v(1) - &mono(n, ge, &[(0, 1)])) / &t2;
    let args = [t_img, r(v(0)), &r(v(2)) / &t2];
    let ualt = |u: &UniPoly<F>| MultiPoly::from_univariate(u, n, 0);
    // y² − x³ − B(t)x² − A(t)x in variables t, x, y.
    let eq = &(&(&v(2).pow(2) - &v(1).pow(3)) - &(&ualt(&b) * &v(1).pow(2))) - &(&ualt(&a) * &v(1));
    let got = RatFunc::substitute(&eq, &args);
    let (fd, gd) = x_alternate_dual_fg(p);
    let dual = &(&(&v(2).pow(2) - &v(1).pow(3)) - &(&uni(&fd) * &v(1))) - &uni(&gd);
    let expected = RatFunc::new(dual, mono(n, F::one(), &[(0, 4)]));
    out.push(Check::new("alternate-dual-substitution", got.equal(&expected), ""));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::check::all_passed;
    use sixlines_algebra::rational::rat;

    fn golden_j() -> JInvariants {
        JInvariants::from_i64([63, -243, 729, -8748, -32076])
    }

    #[test]
    fn quartic_terms() {
        let zero = QuarticParams::<Rational>::from_i64([0; 6]);
        let q = quartic_poly(&zero);
        let expected = &mono(4, rat(1), &[(QY, 2), (QZ, 1), (QW, 1)]) - &mono(4, rat(4), &[(QX, 3), (QZ, 1)]);
        assert_eq!(q, expected);
        let p = QuarticParams::<Rational>::from_i64([0, 0, 1, 0, 1, 0]);
        let extra = &quartic_poly(&p) - &expected;
        let want = &mono(4, rat(1), &[(QX, 1), (QZ, 2), (QW, 1)]) + &mono(4, rat(1), &[(QX, 1), (QW, 3)]);
        assert_eq!(extra, want);
        let p = QuarticParams::<Rational>::from_i64([3, -1, 4, 1, -5, 9]);
        assert!(quartic_poly(&p).is_homogeneous(4));
    }

    #[test]
    fn golden_solve_over_sqrt5() {
        let s = solve_params(&golden_j()).unwrap();
        let SolvedParams::Quadratic(p) = &s else { panic!("expected Q(sqrt 5)") };
        assert_eq!(p.zeta, QuadExt::from_parts(-6, 4, 5));
        assert_eq!(p.delta, QuadExt::from_parts(-4374, -2916, 5));
        assert_eq!(p.delta.clone() * &p.zeta, QuadExt::rational(rat(-32076)));
        assert_eq!(s.radicand(), Some(BigInt::from(5)));
        assert!(s.matches(&golden_j()).unwrap());
        assert!(isogeny_round_trip(&golden_j()).unwrap().passed);
    }

    #[test]
    fn solve_branches() {
        // Disc(A) = 25 - 24 = 1 is a square.
        let j = JInvariants::from_i64([1, 2, 1, 5, 6]);
        let s = solve_params(&j).unwrap();
        assert!(matches!(s, SolvedParams::Rational(_)));
        assert!(s.matches(&j).unwrap());
        let j = JInvariants::from_i64([1, 2, 0, 5, 6]);
        assert!(solve_params(&j).unwrap().matches(&j).unwrap());
        let j = JInvariants::from_i64([1, 2, 0, 0, 6]);
        let s = solve_params(&j).unwrap();
        assert!(s.matches(&j).unwrap());
        let SolvedParams::Rational(p) = s else { panic!() };
        assert!(p.is_polarized());
        assert!(solve_params(&JInvariants::from_i64([1, 2, 0, 0, 0])).is_err());
        assert!(solve_params(&JInvariants::from_i64([1, 0, 0, 0, 6])).is_err());
    }

    #[test]
    fn moduli_match_edge() {
        let p = QuarticParams::<Rational>::from_i64([1, 2, 3, 4, 0, 1]);
        let m = moduli_match(&p).unwrap();
        assert_eq!(m.coords, vec![rat(1), rat(2), rat(0), rat(3), rat(4)]);
    }

    #[test]
    fn symbolic_isogeny() {
        let checks = isogeny_suite();
        for c in &checks {
            assert!(c.passed, "{}", c.name);
        }
        assert_eq!(checks.len(), 11);
    }

    #[test]
    fn symmetries_and_projections() {
        let p = QuarticParams::<Rational>::from_i64([2, -3, 5, 7, -1, 4]);
        assert!(all_passed(&verify_symmetries(&p, &rat(3)).unwrap()));
        assert!(all_passed(&verify_symmetries(&p, &rat(1)).unwrap()));
        assert!(all_passed(&verify_projections(&p).unwrap()));
        let p = QuarticParams::<Rational>::from_i64([2, -3, 0, 7, 0, 4]);
        assert!(all_passed(&verify_projections(&p).unwrap()));
        assert!(verify_projections(&QuarticParams::<Rational>::from_i64([1, 1, 1, 1, 0, 0])).is_err());
    }

    #[test]
    fn point_maps() {
        let a = UniPoly::<Rational>::from_i64(&[9]);
        let b = UniPoly::<Rational>::from_i64(&[-6, 0]);
        // y² = x(x² − 6x + 9) = x(x − 3)²: x = 4 ⇒ y = 2.
        let p = FiberPoint::affine(rat(2), rat(4), rat(2));
        assert!(on_curve(&a, &b, &p));
        let q = vgs_involution_x(&a, &p);
        assert!(on_curve(&a, &b, &q));
        assert_eq!(vgs_involution_x(&a, &q), p);
        let big = isogeny_phi_hat(&a, &p);
        let (a2, b2) = isogenous_coefficients(&a, &b);
        assert!(on_curve(&a2, &b2, &big));
        assert_eq!(isogeny_phi_hat(&a, &q), big);
        let back = isogeny_phi(&a, &b, &big);
        assert!(on_curve(&a, &b, &back));
        assert!(on_curve(&a2, &b2, &vgs_involution_y(&a, &b, &big)));
        let inf = FiberPoint::infinity(rat(2));
        let tau = FiberPoint::affine(rat(2), rat(0), rat(0));
        assert_eq!(vgs_involution_x(&a, &inf), tau);
        assert_eq!(vgs_involution_x(&a, &tau), inf);
        assert_eq!(isogeny_phi_hat(&a, &tau), inf);
        // Fixed points satisfy x² = A: (3, y) with y² = 3·(9 − 18 + 9) = 0.
        let fixed = FiberPoint::affine(rat(2), rat(3), rat(0));
        assert_eq!(vgs_involution_x(&a, &fixed), fixed);
    }
}
