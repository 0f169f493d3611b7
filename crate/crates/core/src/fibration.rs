//! Weierstrass models of the K3 surfaces attached to six lines, and the
//! classification of their singular fibers.

use crate::check::Check;
use crate::error::precondition;
use crate::invariants::{JInvariants, StratumFlags};
use crate::isogeny::QuarticParams;
use crate::CoreError;
use sixlines_algebra::rational::{rat, ratio};
use sixlines_algebra::unipoly::{gcd_free_basis, sort_polys, squarefree_decompose};
use sixlines_algebra::{Field, Rational, UniPoly};
use std::collections::BTreeMap;
use std::fmt;

/// The construction a model came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ModelLabel {
    Natural,
    NaturalDual,
    YAlternate,
    XStandard,
    XAlternate,
    XAlternateDual,
}

impl ModelLabel {
    pub const ALL: [ModelLabel; 6] = [
        ModelLabel::Natural,
        ModelLabel::NaturalDual,
        ModelLabel::YAlternate,
        ModelLabel::XStandard,
        ModelLabel::XAlternate,
        ModelLabel::XAlternateDual,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            ModelLabel::Natural => "natural",
            ModelLabel::NaturalDual => "natural-dual",
            ModelLabel::YAlternate => "y-alt",
            ModelLabel::XStandard => "x-std",
            ModelLabel::XAlternate => "x-alt",
            ModelLabel::XAlternateDual => "x-alt-dual",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|l| l.name() == s)
    }
}

impl fmt::Display for ModelLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `y² = x³ + a2·x² + a4·x + a6` over the affine line with coordinate `t`.
#[derive(Clone, Debug, PartialEq)]
pub struct WeierstrassModel<F = Rational> {
    pub a2: UniPoly<F>,
    pub a4: UniPoly<F>,
    pub a6: UniPoly<F>,
    pub label: ModelLabel,
}

impl<F: Field> WeierstrassModel<F> {
    pub fn new(a2: UniPoly<F>, a4: UniPoly<F>, a6: UniPoly<F>, label: ModelLabel) -> Result<Self, CoreError> {
        let m = WeierstrassModel { a2, a4, a6, label };
        if m.discriminant().is_zero() {
            return Err(precondition(format!("{label} model has identically vanishing discriminant")));
        }
        Ok(m)
    }

    /// `(f, g)` with `y² = x³ + f·x + g` after `x ↦ x − a2/3`.
    pub fn short_form(&self) -> (UniPoly<F>, UniPoly<F>) {
        let third = F::from_rational(ratio(1, 3));
        let a2sq = &self.a2 * &self.a2;
        let f = &self.a4 - &a2sq.scale(&third);
        let g = &(&self.a6 - &(&self.a2 * &self.a4).scale(&third))
            + &(&a2sq * &self.a2).scale(&F::from_rational(ratio(2, 27)));
        (f, g)
    }

    /// Discriminant of the cubic in `x`, i.e. `−(4f³ + 27g²)`.
    pub fn discriminant(&self) -> UniPoly<F> {
        let (f, g) = self.short_form();
        -(&f.pow(3).scale(&F::from_i64(4)) + &(&g * &g).scale(&F::from_i64(27)))
    }

    /// The cubic `x³ + a2 x² + a4 x + a6` as coefficient polynomials, lowest first.
    pub fn cubic(&self) -> [UniPoly<F>; 4] {
        [self.a6.clone(), self.a4.clone(), self.a2.clone(), UniPoly::one()]
    }

    /// Vanishing orders of `f`, `g`, `Δ` at every singular place.
    pub fn local_orders(&self) -> Result<Vec<(Place<F>, Orders)>, CoreError> {
        let (f, g) = self.short_form();
        let disc = self.discriminant();
        for (name, p, bound) in [("f", &f, 8), ("g", &g, 12), ("discriminant", &disc, 24)] {
            if p.degree().is_some_and(|d| d > bound) {
                return Err(precondition(format!("deg {name} exceeds {bound}")));
            }
        }
        let mut pieces = Vec::new();
        for p in [&f, &g, &disc] {
            if p.degree().is_some_and(|d| d > 0) {
                pieces.extend(squarefree_decompose(p)?.into_iter().map(|(q, _)| q));
            }
        }
        let mut places = gcd_free_basis(&pieces);
        places.retain(|p| p.divides(&disc));
        sort_polys(&mut places);
        let ord = |h: &UniPoly<F>, p: &UniPoly<F>| {
            if h.is_zero() {
                INFINITE_ORDER
            } else {
                h.valuation(p) as u32
            }
        };
        let mut out: Vec<(Place<F>, Orders)> = places
            .into_iter()
            .map(|p| {
                let o = Orders { f: ord(&f, &p), g: ord(&g, &p), disc: ord(&disc, &p) };
                (Place::Finite(p), o)
            })
            .collect();
        let at_inf = |h: &UniPoly<F>, n: u32| match h.degree() {
            None => INFINITE_ORDER,
            Some(d) => n - d as u32,
        };
        let inf = Orders { f: at_inf(&f, 8), g: at_inf(&g, 12), disc: at_inf(&disc, 24) };
        if inf.disc > 0 {
            out.push((Place::Infinity, inf));
        }
        Ok(out)
    }

    /// Rejects models with a place where `ord f ≥ 4` and `ord g ≥ 6`.
    pub fn check_minimal(&self) -> Result<(), CoreError> {
        for (place, o) in self.local_orders()? {
            if o.f >= 4 && o.g >= 6 {
                return Err(CoreError::NonMinimal { place: place.to_string(), ord_f: o.f, ord_g: o.g });
            }
        }
        Ok(())
    }
}

/// Stand-in for the order of the zero polynomial.
pub const INFINITE_ORDER: u32 = u32::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Orders {
    pub f: u32,
    pub g: u32,
    pub disc: u32,
}

/// A place of the base: a monic squarefree polynomial (all of whose roots
/// share the same local orders) or the point at infinity.
#[derive(Clone, Debug, PartialEq)]
pub enum Place<F> {
    Finite(UniPoly<F>),
    Infinity,
}

impl<F: Field> Place<F> {
    /// Number of geometric points.
    pub fn count(&self) -> usize {
        match self {
            Place::Finite(p) => p.deg0(),
            Place::Infinity => 1,
        }
    }
}

impl<F: Field> fmt::Display for Place<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Finite(p) => write!(f, "{p}"),
            Place::Infinity => f.write_str("inf"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum KodairaType {
    I(u32),
    IStar(u32),
    II,
    III,
    IV,
    IVStar,
    IIIStar,
    IIStar,
}

impl KodairaType {
    pub fn euler(&self) -> u32 {
        match *self {
            KodairaType::I(n) => n,
            KodairaType::IStar(n) => n + 6,
            KodairaType::II => 2,
            KodairaType::III => 3,
            KodairaType::IV => 4,
            KodairaType::IVStar => 8,
            KodairaType::IIIStar => 9,
            KodairaType::IIStar => 10,
        }
    }

    /// Characteristic-zero table on `(ord f, ord g, ord Δ)`.
    pub fn from_orders(o: Orders) -> Option<Self> {
        let Orders { f, g, disc } = o;
        if disc == 0 {
            return None;
        }
        Some(match (f, g) {
            (0, _) => KodairaType::I(disc),
            (_, 1) => KodairaType::II,
            (1, _) => KodairaType::III,
            (_, 2) => KodairaType::IV,
            (2, 3) => KodairaType::IStar(disc.checked_sub(6)?),
            (2, _) | (_, 3) if disc == 6 => KodairaType::IStar(0),
            (_, 4) if f >= 3 => KodairaType::IVStar,
            (3, _) if g >= 5 => KodairaType::IIIStar,
            (_, 5) if f >= 4 => KodairaType::IIStar,
            _ => return None,
        })
    }
}

impl fmt::Display for KodairaType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KodairaType::I(n) => write!(f, "I{n}"),
            KodairaType::IStar(n) => write!(f, "I{n}*"),
            KodairaType::II => f.write_str("II"),
            KodairaType::III => f.write_str("III"),
            KodairaType::IV => f.write_str("IV"),
            KodairaType::IVStar => f.write_str("IV*"),
            KodairaType::IIIStar => f.write_str("III*"),
            KodairaType::IIStar => f.write_str("II*"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct KodairaFiber<F = Rational> {
    pub kind: KodairaType,
    pub place: Place<F>,
    pub count: usize,
    pub orders: Orders,
}

/// Multiset of fiber types.
pub type FiberCounts = BTreeMap<KodairaType, usize>;

pub fn fiber_counts(items: &[(KodairaType, usize)]) -> FiberCounts {
    let mut m = FiberCounts::new();
    for &(k, n) in items {
        if n > 0 {
            *m.entry(k).or_insert(0) += n;
        }
    }
    m
}

pub fn format_counts(c: &FiberCounts) -> String {
    let parts: Vec<String> = c
        .iter()
        .rev()
        .map(|(k, n)| if *n == 1 { k.to_string() } else { format!("{n}{k}") })
        .collect();
    parts.join(" + ")
}

#[derive(Clone, Debug, PartialEq)]
pub struct FiberReport<F = Rational> {
    pub fibers: Vec<KodairaFiber<F>>,
    pub euler_sum: u32,
    pub two_torsion_order: u32,
}

impl<F: Field> FiberReport<F> {
    pub fn counts(&self) -> FiberCounts {
        let items: Vec<_> = self.fibers.iter().map(|f| (f.kind, f.count)).collect();
        fiber_counts(&items)
    }
}

pub fn kodaira_classify<F: Field>(m: &WeierstrassModel<F>) -> Result<FiberReport<F>, CoreError> {
    let mut fibers = Vec::new();
    for (place, o) in m.local_orders()? {
        if o.f >= 4 && o.g >= 6 {
            return Err(CoreError::NonMinimal { place: place.to_string(), ord_f: o.f, ord_g: o.g });
        }
        let kind = KodairaType::from_orders(o)
            .ok_or_else(|| CoreError::UnknownFiber(o.f, o.g, o.disc, place.to_string()))?;
        let count = place.count();
        fibers.push(KodairaFiber { kind, place, count, orders: o });
    }
    let euler_sum = fibers.iter().map(|f| f.kind.euler() * f.count as u32).sum();
    let two_torsion_order = 1 + polynomial_roots_of_cubic(m).len() as u32;
    Ok(FiberReport { fibers, euler_sum, two_torsion_order })
}

/// Roots `x(t) ∈ F[t]` of `x³ + a2 x² + a4 x + a6`, i.e. the nontrivial
/// two-torsion sections defined over the coefficient field.
///
/// A polynomial root has degree at most `k = max(deg a2, deg a4 / 2, deg a6 / 3)`.
/// Pick `t0` where the specialized cubic is squarefree, lift each of its roots
/// in `F` as a power series in `t − t0` up to order `k`, and keep the lifts
/// that are exact roots.
pub fn polynomial_roots_of_cubic<F: Field>(m: &WeierstrassModel<F>) -> Vec<UniPoly<F>> {
    let cubic = m.cubic();
    let deg = |p: &UniPoly<F>, w: usize| p.degree().map_or(0, |d| d.div_ceil(w));
    let k = deg(&m.a2, 1).max(deg(&m.a4, 2)).max(deg(&m.a6, 3));
    let disc = m.discriminant();
    let t0 = (0i64..)
        .flat_map(|n| if n == 0 { vec![0] } else { vec![n, -n] })
        .map(F::from_i64)
        .find(|t| !disc.eval(t).is_zero())
        .expect("nonzero polynomial has a non-root");
    let shifted: Vec<UniPoly<F>> = cubic.iter().map(|c| c.shift(&t0)).collect();
    let special = UniPoly::new(shifted.iter().map(|c| c.coeff(0)).collect());
    let dspecial = special.derivative();
    let eval_cubic = |r: &UniPoly<F>, cs: &[UniPoly<F>]| {
        let mut acc = UniPoly::zero();
        for c in cs.iter().rev() {
            acc = &(&acc * r) + c;
        }
        acc
    };
    let mut out = Vec::new();
    for r0 in F::roots_in_field(&special) {
        let slope = dspecial.eval(&r0).inv();
        let mut r = UniPoly::constant(r0);
        for i in 1..=k {
            let c = eval_cubic(&r, &shifted).coeff(i);
            r = &r - &UniPoly::monomial(c * &slope, i);
        }
        let root = r.shift(&(-t0.clone()));
        if eval_cubic(&root, &cubic).is_zero() {
            out.push(root);
        }
    }
    out
}

fn lin<F: Field>(c0: F, c1: F) -> UniPoly<F> {
    UniPoly::new(vec![c0, c1])
}

/// `P(u) = (a u + b)((c−1) u + (d−1))` and `Q(u) = (c u + d)((a−1) u + (b−1))`,
/// so that `P = 2(μ − ν)` and `Q = 2(μ + ν)`.
pub fn natural_pq(m: &[Rational; 4]) -> (UniPoly<Rational>, UniPoly<Rational>) {
    let [a, b, c, d] = m;
    let one = rat(1);
    let p = &lin(b.clone(), a.clone()) * &lin(d - &one, c - &one);
    let q = &lin(d.clone(), c.clone()) * &lin(b - &one, a - &one);
    (p, q)
}

/// `(μ, ν)` as polynomials in `u`.
pub fn natural_mu_nu(m: &[Rational; 4]) -> (UniPoly<Rational>, UniPoly<Rational>) {
    let (p, q) = natural_pq(m);
    let quarter = ratio(1, 4);
    ((&p + &q).scale(&quarter), (&q - &p).scale(&quarter))
}

/// `Y² = X (X − 2u(μ−ν)) (X − 2u(μ+ν))`.
pub fn natural_fibration(m: &[Rational; 4]) -> Result<WeierstrassModel, CoreError> {
    let (p, q) = natural_pq(m);
    let u = UniPoly::<Rational>::x();
    let a2 = -(&u * &(&p + &q));
    let a4 = &(&u * &u) * &(&p * &q);
    let model = WeierstrassModel::new(a2, a4, UniPoly::zero(), ModelLabel::Natural)?;
    model.check_minimal()?;
    Ok(model)
}

/// Closed form `2⁸ u⁶ ν² (μ² − ν²)²` of the natural discriminant. The square
/// factor is `ν²`: the two nonzero roots `2u(μ∓ν)` differ by `4uν`.
pub fn natural_discriminant_closed_form(m: &[Rational; 4]) -> UniPoly<Rational> {
    let (mu, nu) = natural_mu_nu(m);
    let u6 = UniPoly::monomial(rat(256), 6);
    let diff = &(&mu * &mu) - &(&nu * &nu);
    &(&u6 * &(&nu * &nu)) * &(&diff * &diff)
}

/// Quartic `η² = A u⁴ + B u³ + C u² + D u + E²` in `u` over the `ξ`-line,
/// returned as `[A, B, C, D, E]`.
pub fn natural_dual_quartic(m: &[Rational; 4]) -> [UniPoly<Rational>; 5] {
    let (mu, nu) = natural_mu_nu(m);
    let nu2 = &nu * &nu;
    let xi4 = |c: Rational| UniPoly::monomial(c, 4);
    let xi2 = |c: Rational| UniPoly::monomial(c * rat(2), 2);
    let a = xi4(nu2.coeff(4));
    let b = &xi4(nu2.coeff(3)) + &xi2(mu.coeff(2));
    let c = &(&xi4(nu2.coeff(2)) + &xi2(mu.coeff(1))) + &UniPoly::one();
    let d = &xi4(nu2.coeff(1)) + &xi2(mu.coeff(0));
    let e = UniPoly::monomial(nu.coeff(0), 2);
    [a, b, c, d, e]
}

/// `(g2, g3)` of `y² = 4x³ − g2 x − g3` for the dual of the natural fibration.
pub fn natural_dual_g2_g3(m: &[Rational; 4]) -> (UniPoly<Rational>, UniPoly<Rational>) {
    let [a, b, c, d, e] = natural_dual_quartic(m);
    let e2 = &e * &e;
    let g2 = &(&(&c * &c).scale(&ratio(16, 3)) + &(&a * &e2).scale(&rat(64))) - &(&b * &d).scale(&rat(16));
    let g3 = &(&(&(&c.pow(3).scale(&ratio(-64, 27)) + &(&(&a * &c) * &e2).scale(&ratio(256, 3)))
        + &(&(&b * &c) * &d).scale(&ratio(32, 3)))
        - &(&(&a * &d) * &d).scale(&rat(32)))
        - &(&(&b * &b) * &e2).scale(&rat(32));
    (g2, g3)
}

/// The dual fibration, rescaled from `y² = 4x³ − g2 x − g3` to monic form.
pub fn natural_bfdual(m: &[Rational; 4]) -> Result<WeierstrassModel, CoreError> {
    let (g2, g3) = natural_dual_g2_g3(m);
    let q = ratio(-1, 4);
    let model = WeierstrassModel::new(UniPoly::zero(), g2.scale(&q), g3.scale(&q), ModelLabel::NaturalDual)?;
    model.check_minimal()?;
    Ok(model)
}

/// `(𝓑, 𝓐) = (t³ − 3J2 t − 2J3, J4 t² − J5 t + J6)`.
pub fn y_alternate_ab<F: Field>(j: &JInvariants<F>) -> (UniPoly<F>, UniPoly<F>) {
    let b = UniPoly::new(vec![
        -(F::from_i64(2) * j.j3()),
        -(F::from_i64(3) * j.j2()),
        F::zero(),
        F::one(),
    ]);
    let a = UniPoly::new(vec![j.j6().clone(), -j.j5().clone(), j.j4().clone()]);
    (b, a)
}

/// `Y² = X (X² − 2𝓑 X + 𝓑² − 4𝓐)`.
pub fn y_alternate<F: Field>(j: &JInvariants<F>) -> Result<WeierstrassModel<F>, CoreError> {
    if !j.is_valid() {
        return Err(precondition("(J3, J4, J5) must not all vanish"));
    }
    let (b, a) = y_alternate_ab(j);
    let a2 = b.scale(&F::from_i64(-2));
    let a4 = &(&b * &b) - &a.scale(&F::from_i64(4));
    WeierstrassModel::new(a2, a4, UniPoly::zero(), ModelLabel::YAlternate)
}

/// `16 𝓐 (𝓑² − 4𝓐)²`.
pub fn y_alternate_discriminant_closed_form<F: Field>(j: &JInvariants<F>) -> UniPoly<F> {
    let (b, a) = y_alternate_ab(j);
    let s = &(&b * &b) - &a.scale(&F::from_i64(4));
    (&a * &(&s * &s)).scale(&F::from_i64(16))
}

/// `f = 4s³(γs² − 3αs + ε)`, `g = −8s⁵(δs² + 2βs + ζ)`.
pub fn x_standard<F: Field>(p: &QuarticParams<F>) -> Result<WeierstrassModel<F>, CoreError> {
    p.check_polarized()?;
    let (f, g) = x_standard_fg(p);
    WeierstrassModel::new(UniPoly::zero(), f, g, ModelLabel::XStandard)
}

pub fn x_standard_fg<F: Field>(p: &QuarticParams<F>) -> (UniPoly<F>, UniPoly<F>) {
    let three = F::from_i64(3);
    let two = F::from_i64(2);
    let fq = UniPoly::new(vec![p.epsilon.clone(), -(three * &p.alpha), p.gamma.clone()]);
    let gq = UniPoly::new(vec![p.zeta.clone(), two * &p.beta, p.delta.clone()]);
    let f = &UniPoly::monomial(F::from_i64(4), 3) * &fq;
    let g = &UniPoly::monomial(F::from_i64(-8), 5) * &gq;
    (f, g)
}

/// The sextic `P(s)` with discriminant `−64 s⁹ P(s)`, coefficients as listed.
pub fn x_standard_sextic<F: Field>(p: &QuarticParams<F>) -> UniPoly<F> {
    let (al, be, ga, de, ep, ze) = (&p.alpha, &p.beta, &p.gamma, &p.delta, &p.epsilon, &p.zeta);
    let k = |n: i64| F::from_i64(n);
    let m = |a: &F, b: &F| a.clone() * b;
    UniPoly::new(vec![
        k(4) * &ep.powu(3),
        k(-9) * &(k(4) * &m(al, &ep.powu(2)) - k(3) * &ze.powu(2)),
        k(12) * &(k(9) * &m(&al.powu(2), ep) + k(9) * &m(be, ze) + m(ga, &ep.powu(2))),
        k(-18) * &(k(6) * &al.powu(3) + k(4) * &m(&m(al, ga), ep) - k(6) * &be.powu(2) - k(3) * &m(de, ze)),
        k(12) * &(k(9) * &m(&al.powu(2), ga) + k(9) * &m(be, de) + m(&ga.powu(2), ep)),
        k(-9) * &(k(4) * &m(al, &ga.powu(2)) - k(3) * &de.powu(2)),
        k(4) * &ga.powu(3),
    ])
}

pub fn x_standard_discriminant_closed_form<F: Field>(p: &QuarticParams<F>) -> UniPoly<F> {
    &UniPoly::monomial(F::from_i64(-64), 9) * &x_standard_sextic(p)
}

/// `A = (γt − δ)(εt − ζ)`, `B = t³ − 3αt − 2β`.
pub fn x_alternate_ab<F: Field>(p: &QuarticParams<F>) -> (UniPoly<F>, UniPoly<F>) {
    let a = &lin(-p.delta.clone(), p.gamma.clone()) * &lin(-p.zeta.clone(), p.epsilon.clone());
    let b = UniPoly::new(vec![
        -(F::from_i64(2) * &p.beta),
        -(F::from_i64(3) * &p.alpha),
        F::zero(),
        F::one(),
    ]);
    (a, b)
}

/// `y² = x (x² + B x + A)`.
pub fn x_alternate<F: Field>(p: &QuarticParams<F>) -> Result<WeierstrassModel<F>, CoreError> {
    p.check_polarized()?;
    let (a, b) = x_alternate_ab(p);
    WeierstrassModel::new(b, a, UniPoly::zero(), ModelLabel::XAlternate)
}

/// `A² (B² − 4A)`.
pub fn x_alternate_discriminant_closed_form<F: Field>(p: &QuarticParams<F>) -> UniPoly<F> {
    let (a, b) = x_alternate_ab(p);
    &(&a * &a) * &(&(&b * &b) - &a.scale(&F::from_i64(4)))
}

/// `(f̌, ǧ)` of the base-fiber dual of the X-alternate fibration.
pub fn x_alternate_dual_fg<F: Field>(p: &QuarticParams<F>) -> (UniPoly<F>, UniPoly<F>) {
    let k = |n: i64| F::from_i64(n);
    let ge = p.gamma.clone() * &p.epsilon;
    let mixed = p.gamma.clone() * &p.zeta + p.delta.clone() * &p.epsilon;
    let fin = UniPoly::new(vec![ge.powu(2), k(3) * &mixed, k(9) * &p.alpha]);
    let f = &UniPoly::monomial(F::from_rational(ratio(-1, 3)), 2) * &fin;
    let gin = UniPoly::new(vec![
        k(2) * &ge.powu(3),
        k(9) * &(ge.clone() * &mixed),
        k(27) * &(p.alpha.clone() * &ge + p.delta.clone() * &p.zeta),
        k(-54) * &p.beta,
        k(27),
    ]);
    let g = &UniPoly::monomial(F::from_rational(ratio(1, 27)), 3) * &gin;
    (f, g)
}

pub fn x_alternate_bfdual<F: Field>(p: &QuarticParams<F>) -> Result<WeierstrassModel<F>, CoreError> {
    p.check_polarized()?;
    let (f, g) = x_alternate_dual_fg(p);
    WeierstrassModel::new(UniPoly::zero(), f, g, ModelLabel::XAlternateDual)
}

/// The rows of the confluence tables: which invariants vanish.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConfluenceRow {
    Generic,
    /// `Res(A, B) = 0`.
    ResultantAB,
    /// `J4 = 0`.
    J4,
    /// `Disc(A) = 0`.
    DiscA,
    /// `Disc(S) = 0`.
    DiscS,
    /// `Disc(A) = Res(A, B) = 0`.
    DiscAResultantAB,
    /// `J4 = J5 = 0`.
    J4J5,
}

impl ConfluenceRow {
    /// The single row described by `flags`, or `None` for an invalid point or
    /// an overlap of rows the tables do not cover.
    pub fn from_flags(fl: &StratumFlags) -> Option<Self> {
        if !fl.valid {
            return None;
        }
        if fl.case_5 {
            return Some(ConfluenceRow::J4J5);
        }
        if fl.cases_3_4 {
            return Some(ConfluenceRow::DiscAResultantAB);
        }
        let hits = [fl.tangent, fl.concurrent, fl.res_ab_zero, fl.disc_s_component];
        match hits.iter().filter(|&&h| h).count() {
            0 => Some(ConfluenceRow::Generic),
            1 if fl.tangent => Some(ConfluenceRow::J4),
            1 if fl.concurrent => Some(ConfluenceRow::DiscA),
            1 if fl.res_ab_zero => Some(ConfluenceRow::ResultantAB),
            1 => Some(ConfluenceRow::DiscS),
            _ => None,
        }
    }
}

/// Predicted fibers for a model built from a point in the stratum `flags`.
pub fn expected_fibers(flags: &StratumFlags, label: ModelLabel) -> Option<FiberCounts> {
    use ConfluenceRow as R;
    use KodairaType::*;
    let row = ConfluenceRow::from_flags(flags)?;
    let items: &[(KodairaType, usize)] = match (label, row) {
        (ModelLabel::Natural, R::Generic | R::J4) => &[(I(2), 6), (IStar(0), 2)],
        (ModelLabel::NaturalDual, R::Generic) => &[(I(1), 12), (I(4), 1), (I(8), 1)],
        (ModelLabel::YAlternate, R::Generic) => &[(I(2), 6), (I(1), 2), (IStar(4), 1)],
        (ModelLabel::YAlternate, R::J4) => &[(I(2), 6), (I(1), 1), (IStar(5), 1)],
        (ModelLabel::XStandard, R::Generic) => &[(IIIStar, 2), (I(1), 6)],
        (ModelLabel::XStandard, R::J4) => &[(IIStar, 1), (IIIStar, 1), (I(1), 5)],
        (ModelLabel::XStandard, R::DiscS) => &[(IIIStar, 2), (I(2), 1), (I(1), 4)],
        (ModelLabel::XStandard, R::J4J5) => &[(IIStar, 2), (I(1), 4)],
        (ModelLabel::XAlternate, R::Generic) => &[(IStar(8), 1), (I(2), 2), (I(1), 6)],
        (ModelLabel::XAlternate, R::ResultantAB) => &[(IStar(8), 1), (I(2), 1), (III, 1), (I(1), 5)],
        (ModelLabel::XAlternate, R::J4) => &[(IStar(10), 1), (I(2), 1), (I(1), 6)],
        (ModelLabel::XAlternate, R::DiscA) => &[(IStar(8), 1), (I(4), 1), (I(1), 6)],
        (ModelLabel::XAlternate, R::DiscS) => &[(IStar(8), 1), (I(2), 3), (I(1), 4)],
        (ModelLabel::XAlternate, R::DiscAResultantAB) => &[(IStar(8), 1), (IStar(0), 1), (I(1), 4)],
        (ModelLabel::XAlternate, R::J4J5) => &[(IStar(12), 1), (I(1), 6)],
        (ModelLabel::XAlternateDual, R::Generic) => &[(IIStar, 1), (IStar(2), 1), (I(1), 6)],
        (ModelLabel::XAlternateDual, R::J4) => &[(IIStar, 1), (IIIStar, 1), (I(1), 5)],
        (ModelLabel::XAlternateDual, R::DiscA) => &[(IIStar, 1), (IStar(3), 1), (I(1), 5)],
        (ModelLabel::XAlternateDual, R::DiscS) => &[(IIStar, 1), (IStar(2), 1), (I(2), 1), (I(1), 4)],
        (ModelLabel::XAlternateDual, R::DiscAResultantAB) => &[(IIStar, 1), (IStar(4), 1), (I(1), 4)],
        (ModelLabel::XAlternateDual, R::J4J5) => &[(IIStar, 2), (I(1), 4)],
        _ => return None,
    };
    Some(fiber_counts(items))
}

/// Order of the two-torsion subgroup forced by the construction, where there
/// is one.
pub fn expected_two_torsion(label: ModelLabel) -> Option<u32> {
    match label {
        ModelLabel::Natural => Some(4),
        ModelLabel::YAlternate | ModelLabel::XAlternate => Some(2),
        _ => None,
    }
}

/// Whether `observed` arises from `predicted` by collisions: the predicted
/// fibers split into groups, one per observed fiber, with matching Euler
/// numbers.
pub fn is_confluence(predicted: &FiberCounts, observed: &FiberCounts) -> bool {
    let expand = |c: &FiberCounts| -> Vec<u32> {
        let mut v: Vec<u32> = c.iter().flat_map(|(k, &n)| std::iter::repeat_n(k.euler(), n)).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    };
    let pred = expand(predicted);
    let mut room = expand(observed);
    if pred.iter().sum::<u32>() != room.iter().sum::<u32>() || pred.len() < room.len() {
        return false;
    }
    fn place(pred: &[u32], room: &mut [u32], free: usize) -> bool {
        let Some((&e, rest)) = pred.split_first() else {
            return room.iter().all(|&r| r == 0);
        };
        // Every observed fiber needs at least one predicted fiber.
        if rest.len() + 1 < free {
            return false;
        }
        for i in 0..room.len() {
            if room[i] < e || room[..i].contains(&room[i]) {
                continue;
            }
            let opened = usize::from(room[i] == e);
            room[i] -= e;
            if place(rest, room, free - opened) {
                return true;
            }
            room[i] += e;
        }
        false
    }
    let n = room.len();
    place(&pred, &mut room, n)
}

/// Classifies `m` and compares it with the prediction for `flags`, with Euler
/// sum 24 and the forced torsion subgroup. The stratum flags do not see further
/// collisions inside a row, so a confluence of the predicted fibers is
/// accepted and reported as such.
pub fn fiber_check<F: Field>(m: &WeierstrassModel<F>, flags: &StratumFlags) -> Result<(FiberReport<F>, Check), CoreError> {
    let r = kodaira_classify(m)?;
    let counts = r.counts();
    let want = expected_fibers(flags, m.label);
    let torsion = expected_two_torsion(m.label);
    let fibers_ok = match &want {
        None => true,
        Some(w) => *w == counts || is_confluence(w, &counts),
    };
    // Off the generic row, special points can carry full two-torsion.
    let generic = ConfluenceRow::from_flags(flags) == Some(ConfluenceRow::Generic);
    let torsion_ok = torsion.is_none_or(|t| if generic { r.two_torsion_order == t } else { r.two_torsion_order % t == 0 });
    let ok = r.euler_sum == 24 && fibers_ok && torsion_ok;
    let mut detail = format!("{}; euler {}; torsion {}", format_counts(&counts), r.euler_sum, r.two_torsion_order);
    match &want {
        Some(w) if *w == counts => detail += "; matches the stratum prediction",
        Some(w) => detail += &format!("; stratum predicts {}", format_counts(w)),
        None => detail += "; no prediction for this stratum",
    }
    if want.as_ref().is_some_and(|w| *w != counts && fibers_ok) {
        detail += ", observed fibers are a confluence of it";
    }
    Ok((r, Check::new(format!("{}-fibers", m.label.name()), ok, detail)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use sixlines_algebra::QuadExt;

    fn golden() -> [Rational; 4] {
        [rat(2), rat(3), rat(4), rat(5)]
    }

    // The golden point lies on Disc(S) = 0, so fiber tests use this one.
    fn generic() -> [Rational; 4] {
        [rat(3), rat(7), rat(11), rat(13)]
    }

    fn orders(f: u32, g: u32, disc: u32) -> Option<KodairaType> {
        KodairaType::from_orders(Orders { f, g, disc })
    }

    #[test]
    fn confluence_examples() {
        use KodairaType::*;
        let p = fiber_counts(&[(IIIStar, 2), (I(2), 1), (I(1), 4)]);
        assert!(is_confluence(&p, &fiber_counts(&[(IIIStar, 2), (II, 1), (I(2), 2)])));
        assert!(is_confluence(&p, &fiber_counts(&[(IIIStar, 2), (I(3), 1), (I(1), 3)])));
        assert!(is_confluence(&p, &p));
        assert!(!is_confluence(&p, &fiber_counts(&[(IIIStar, 2), (I(1), 6)])));
        assert!(!is_confluence(&p, &fiber_counts(&[(IIStar, 1), (IStar(2), 1), (I(1), 6)])));
        assert!(!is_confluence(&p, &fiber_counts(&[(IIIStar, 1), (IStar(4), 1), (I(2), 1), (I(1), 4)])));
    }

    #[test]
    fn order_table() {
        use KodairaType::*;
        assert_eq!(orders(0, 0, 2), Some(I(2)));
        assert_eq!(orders(2, 3, 14), Some(IStar(8)));
        assert_eq!(orders(2, 3, 6), Some(IStar(0)));
        assert_eq!(orders(3, 3, 6), Some(IStar(0)));
        assert_eq!(orders(2, INFINITE_ORDER, 6), Some(IStar(0)));
        assert_eq!(orders(1, 1, 2), Some(II));
        assert_eq!(orders(1, 2, 3), Some(III));
        assert_eq!(orders(2, 2, 4), Some(IV));
        assert_eq!(orders(3, 4, 8), Some(IVStar));
        assert_eq!(orders(3, 5, 9), Some(IIIStar));
        assert_eq!(orders(4, 5, 10), Some(IIStar));
        assert_eq!(orders(0, 0, 0), None);
    }

    #[test]
    fn natural_golden_factors() {
        let (p, q) = natural_pq(&golden());
        assert_eq!(p, &UniPoly::from_i64(&[3, 2]) * &UniPoly::from_i64(&[4, 3]));
        assert_eq!(q, &UniPoly::from_i64(&[5, 4]) * &UniPoly::from_i64(&[2, 1]));
    }

    #[test]
    fn natural_fibers() {
        let m = natural_fibration(&generic()).unwrap();
        let r = kodaira_classify(&m).unwrap();
        assert_eq!(r.counts(), fiber_counts(&[(KodairaType::I(2), 6), (KodairaType::IStar(0), 2)]));
        assert_eq!(r.euler_sum, 24);
        assert_eq!(r.two_torsion_order, 4);
        assert_eq!(r.fibers[0].place, Place::Finite(UniPoly::x()));
        assert_eq!(r.fibers[0].orders, Orders { f: 2, g: 3, disc: 6 });
    }

    #[test]
    fn natural_discriminant_uses_nu() {
        let m = golden();
        let model = natural_fibration(&m).unwrap();
        assert_eq!(model.discriminant(), natural_discriminant_closed_form(&m));
        let (mu, nu) = natural_mu_nu(&m);
        let diff = &(&mu * &mu) - &(&nu * &nu);
        let with_mu = &(&UniPoly::monomial(rat(256), 6) * &(&mu * &mu)) * &(&diff * &diff);
        assert_ne!(model.discriminant(), with_mu);
    }

    #[test]
    fn four_concurrent_lines_are_non_minimal() {
        // b = d = 0 puts lines 1, 2, 5, 6 through [0:0:1].
        let m = [rat(2), rat(0), rat(4), rat(0)];
        assert!(matches!(natural_fibration(&m), Err(CoreError::NonMinimal { .. })));
    }

    #[test]
    fn natural_dual_fibers() {
        let m = natural_bfdual(&generic()).unwrap();
        let [.., e] = natural_dual_quartic(&generic());
        let (_, nu) = natural_mu_nu(&generic());
        assert_eq!(&e * &e, UniPoly::monomial(nu.coeff(0) * nu.coeff(0), 4));
        let r = kodaira_classify(&m).unwrap();
        use KodairaType::*;
        assert_eq!(r.counts(), fiber_counts(&[(I(1), 12), (I(4), 1), (I(8), 1)]));
        assert_eq!(r.euler_sum, 24);
        assert_eq!(r.two_torsion_order, 1);
    }

    #[test]
    fn y_alternate_golden() {
        let j = JInvariants::from_i64([63, -243, 729, -8748, -32076]);
        let m = y_alternate(&j).unwrap();
        assert_eq!(m.discriminant(), y_alternate_discriminant_closed_form(&j));
        let r = kodaira_classify(&m).unwrap();
        use KodairaType::*;
        // Two discriminant components pass through this point: two I2 pairs merge.
        assert_eq!(r.counts(), fiber_counts(&[(I(2), 2), (I(4), 2), (I(1), 2), (IStar(4), 1)]));
        assert_eq!(r.two_torsion_order, 2);
        let sq = squarefree_decompose(&m.discriminant()).unwrap();
        let (b, a) = y_alternate_ab(&j);
        // 𝓐 is simple; the sextic itself has two double roots here.
        assert_eq!(sq[0], (a.monic(), 1));
        let sextic = &(&b * &b) - &a.scale(&rat(4));
        let rest = sq[1..].iter().fold(UniPoly::one(), |acc, (q, k)| &acc * &q.pow(*k as u32));
        assert_eq!(rest, (&sextic * &sextic).monic());
        assert_eq!(sq.iter().map(|(_, k)| *k).collect::<Vec<_>>(), vec![1, 2, 4]);
    }

    #[test]
    fn x_models_generic() {
        use KodairaType::*;
        let p = QuarticParams::<Rational>::from_i64([1, 2, 3, -1, 2, 5]);
        let std = x_standard(&p).unwrap();
        assert_eq!(std.discriminant(), x_standard_discriminant_closed_form(&p));
        let r = kodaira_classify(&std).unwrap();
        assert_eq!(r.counts(), fiber_counts(&[(IIIStar, 2), (I(1), 6)]));
        let alt = x_alternate(&p).unwrap();
        assert_eq!(alt.discriminant(), x_alternate_discriminant_closed_form(&p));
        let r = kodaira_classify(&alt).unwrap();
        assert_eq!(r.counts(), fiber_counts(&[(IStar(8), 1), (I(2), 2), (I(1), 6)]));
        assert_eq!(r.two_torsion_order, 2);
        let inf = r.fibers.last().unwrap();
        assert_eq!((inf.place.clone(), inf.orders), (Place::Infinity, Orders { f: 2, g: 3, disc: 14 }));
        let dual = x_alternate_bfdual(&p).unwrap();
        let r = kodaira_classify(&dual).unwrap();
        assert_eq!(r.counts(), fiber_counts(&[(IIStar, 1), (IStar(2), 1), (I(1), 6)]));
        assert_eq!(r.two_torsion_order, 1);
        assert_eq!(r.euler_sum, 24);
    }

    #[test]
    fn x_standard_promotions() {
        use KodairaType::*;
        let p = QuarticParams::<Rational>::from_i64([1, 2, 3, -1, 0, 5]);
        let r = kodaira_classify(&x_standard(&p).unwrap()).unwrap();
        let at0 = r.fibers.iter().find(|f| f.place == Place::Finite(UniPoly::x())).unwrap();
        assert_eq!(at0.kind, IIStar);
        let p = QuarticParams::<Rational>::from_i64([1, 2, 0, -1, 2, 5]);
        let r = kodaira_classify(&x_standard(&p).unwrap()).unwrap();
        assert_eq!(r.fibers.last().unwrap().kind, IIStar);
        assert_eq!(r.euler_sum, 24);
    }

    #[test]
    fn quadratic_parameters() {
        // ζ = −6 + 4√5, δ = −4374 − 2916√5 at the golden J-point.
        let q = |a, b| QuadExt::from_parts(a, b, 5);
        let c = |a| QuadExt::rational(rat(a));
        let p = QuarticParams::new(c(63), c(-243), c(729), q(-4374, -2916), c(1), q(-6, 4));
        for m in [x_standard(&p).unwrap(), x_alternate(&p).unwrap(), x_alternate_bfdual(&p).unwrap()] {
            assert_eq!(kodaira_classify(&m).unwrap().euler_sum, 24);
        }
        // The roots of A and the two double roots of S share the orders (0, 0, 2)
        // and so land in one place of degree four.
        let r = kodaira_classify(&x_alternate(&p).unwrap()).unwrap();
        use KodairaType::*;
        assert_eq!(r.counts(), fiber_counts(&[(IStar(8), 1), (I(2), 4), (I(1), 2)]));
        let (a, _) = x_alternate_ab(&p);
        let i2 = r.fibers.iter().find(|f| f.kind == I(2)).unwrap();
        match &i2.place {
            Place::Finite(q) => assert!(a.divides(q)),
            Place::Infinity => panic!("I2 at infinity"),
        }
    }

    #[test]
    fn rejects_unpolarized() {
        let p = QuarticParams::<Rational>::from_i64([1, 2, 3, -1, 0, 0]);
        assert!(x_standard(&p).is_err());
        assert!(x_alternate(&p).is_err());
    }

    #[test]
    fn short_form_preserves_discriminant() {
        let m = natural_fibration(&golden()).unwrap();
        let cubic = m.cubic();
        // Discriminant of the cubic in x, computed at a few specializations of t.
        for t in -3..=3 {
            let spec = UniPoly::new(cubic.iter().map(|c| c.eval(&rat(t))).collect());
            let d = sixlines_algebra::unipoly::discriminant(&spec).unwrap();
            assert_eq!(d, m.discriminant().eval(&rat(t)));
        }
    }
}
