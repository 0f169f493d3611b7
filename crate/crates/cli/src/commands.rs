//! One function per subcommand; each fills a [`Results`] table.

use crate::input::{Params, Request, Source};
use crate::json::{fibers_json, int_json, model_json, poly_json, vec_json, Results, ToJson};
use crate::CliError;
use serde_json::{json, Value};
use sixlines_algebra::rational::rat;
use sixlines_algebra::{Field, QuadExt, Rational};
use sixlines_core::check::Check;
use sixlines_core::configuration::Configuration;
use sixlines_core::fibration::{
    fiber_check, natural_bfdual, natural_fibration, x_alternate, x_alternate_bfdual, x_standard, y_alternate,
    ConfluenceRow, ModelLabel, WeierstrassModel,
};
use sixlines_core::genus_two::{igusa_clebsch, restriction_check, RosenhainCurve};
use sixlines_core::identities;
use sixlines_core::invariants::{
    configuration_j, derived_invariants, satake_sextic, stratum_from_invariants, JInvariants, SatakeCoordinates,
    StratumFlags,
};
use sixlines_core::isogeny::{
    isogeny_round_trip, isogeny_suite, params_j, solve_params, verify_projections, verify_symmetries, QuarticParams,
    SolvedParams,
};
use sixlines_core::sample;

pub const DEFAULT_SAMPLES: usize = 50;

trait Exact: Field + ToJson {}
impl Exact for Rational {}
impl Exact for QuadExt {}

fn need_source(req: &Request) -> Result<&Source, CliError> {
    req.source
        .as_ref()
        .ok_or_else(|| CliError::Precondition("an input source is required (--input, --moduli, --rosenhain or --params)".into()))
}

/// The J-point of the input, over `Q` whenever its coordinates are rational.
enum JPoint {
    Rational(JInvariants),
    Quadratic(JInvariants<QuadExt>),
}

fn j_point(src: &Source) -> Result<JPoint, CliError> {
    Ok(match src {
        Source::Params(Params::Rational(p)) => JPoint::Rational(params_j(p)),
        Source::Params(Params::Quadratic(p)) => {
            let j = params_j(p);
            match j.j.iter().map(Field::to_rational).collect::<Option<Vec<_>>>() {
                Some(v) => JPoint::Rational(JInvariants::new(v.try_into().expect("five"))),
                None => JPoint::Quadratic(j),
            }
        }
        _ => JPoint::Rational(configuration_j(&src.configuration()?)),
    })
}

fn flags_json(f: &StratumFlags) -> Value {
    json!({
        "valid": f.valid,
        "tangent": f.tangent,
        "concurrent": f.concurrent,
        "res-ab-zero": f.res_ab_zero,
        "cases-3-4": f.cases_3_4,
        "case-5": f.case_5,
        "disc-s-component": f.disc_s_component,
    })
}

fn flags_of<F: Field>(j: &JInvariants<F>) -> StratumFlags {
    stratum_from_invariants(j, &derived_invariants(j))
}

fn j_block<F: Exact>(res: &mut Results, j: &JInvariants<F>) {
    res.info("j", vec_json(&j.j));
    let sx = satake_sextic(j);
    res.info("satake-sextic", json!({ "b": poly_json(&sx.b), "a": poly_json(&sx.a), "s": poly_json(&sx.s) }));
    let d = derived_invariants(j);
    res.info("disc-a", d.disc_a.to_json());
    res.info("res-ab", d.res_ab.to_json());
    res.info("disc-s", d.disc_s.to_json());
    let flags = stratum_from_invariants(j, &d);
    res.info("stratum-flags", flags_json(&flags));
    let row = ConfluenceRow::from_flags(&flags).map(|r| format!("{r:?}"));
    res.info("confluence-row", json!(row));
}

fn configuration_block(res: &mut Results, c: &Configuration) {
    let d = c.do_coordinates();
    res.info("t", vec_json(&d.t));
    res.info("r", d.r.to_json());
    res.info("satake", vec_json(&SatakeCoordinates::from_t(&d.t).x));
    res.info("stratum", json!(c.classify_refined().kind.label()));
    res.checks(&d.verify_relations());
}

pub fn invariants(req: &Request) -> Result<Results, CliError> {
    let src = need_source(req)?;
    let mut res = Results::default();
    if !matches!(src, Source::Params(_)) {
        configuration_block(&mut res, &src.configuration()?);
    }
    match j_point(src)? {
        JPoint::Rational(j) => j_block(&mut res, &j),
        JPoint::Quadratic(j) => j_block(&mut res, &j),
    }
    Ok(res)
}

pub fn classify(req: &Request) -> Result<Results, CliError> {
    let c = need_source(req)?.configuration()?;
    let s = c.classify_refined();
    let d = c.do_coordinates();
    let mut res = Results::default();
    res.info("stratum", json!(s.kind.label()));
    res.info("vanishing-t", json!(s.vanishing_t));
    res.info("r-is-zero", json!(s.r_is_zero));
    res.info("discriminant-components", json!(d.discriminant_components()));
    let flags = flags_of(&configuration_j(&c));
    res.info("stratum-flags", flags_json(&flags));
    res.info("confluence-row", json!(ConfluenceRow::from_flags(&flags).map(|r| format!("{r:?}"))));
    Ok(res)
}

fn record_model<F: Exact>(res: &mut Results, prefix: &str, m: &WeierstrassModel<F>, flags: &StratumFlags) -> Result<(), CliError> {
    let (r, c) = fiber_check(m, flags)?;
    let value = json!({
        "model": m.label.name(),
        "coefficients": model_json(m),
        "fibers": fibers_json(&r),
        "counts": sixlines_core::fibration::format_counts(&r.counts()),
        "euler-sum": r.euler_sum,
        "two-torsion-order": r.two_torsion_order,
    });
    let c = Check::new(format!("{prefix}{}", c.name), c.passed, c.detail);
    res.check_with(&c, value);
    Ok(())
}

fn x_models<F: Exact>(res: &mut Results, prefix: &str, p: &QuarticParams<F>, labels: &[ModelLabel]) -> Result<(), CliError> {
    let flags = flags_of(&params_j(p));
    for &l in labels {
        let m = match l {
            ModelLabel::XStandard => x_standard(p)?,
            ModelLabel::XAlternate => x_alternate(p)?,
            ModelLabel::XAlternateDual => x_alternate_bfdual(p)?,
            _ => continue,
        };
        record_model(res, prefix, &m, &flags)?;
    }
    Ok(())
}

fn y_model<F: Exact>(res: &mut Results, prefix: &str, j: &JInvariants<F>) -> Result<(), CliError> {
    record_model(res, prefix, &y_alternate(j)?, &flags_of(j))
}

/// Parameters of the input: as given, or solved from its J-point.
fn params_of(src: &Source) -> Result<Params, CliError> {
    if let Source::Params(p) = src {
        return Ok(p.clone());
    }
    let j = configuration_j(&src.configuration()?);
    Ok(match solve_params(&j)? {
        SolvedParams::Rational(p) => Params::Rational(p),
        SolvedParams::Quadratic(p) => Params::Quadratic(p),
    })
}

fn model_entry(res: &mut Results, prefix: &str, src: &Source, l: ModelLabel) -> Result<(), CliError> {
    match l {
        ModelLabel::Natural | ModelLabel::NaturalDual => {
            let Source::Moduli(m) = src else {
                return Err(CliError::Precondition(format!("the {l} model needs --moduli input")));
            };
            let model = if l == ModelLabel::Natural { natural_fibration(m)? } else { natural_bfdual(m)? };
            let flags = flags_of(&configuration_j(&src.configuration()?));
            record_model(res, prefix, &model, &flags)
        }
        ModelLabel::YAlternate => match j_point(src)? {
            JPoint::Rational(j) => y_model(res, prefix, &j),
            JPoint::Quadratic(j) => y_model(res, prefix, &j),
        },
        _ => match params_of(src)? {
            Params::Rational(p) => x_models(res, prefix, &p, &[l]),
            Params::Quadratic(p) => x_models(res, prefix, &p, &[l]),
        },
    }
}

fn run_model(res: &mut Results, prefix: &str, src: &Source, l: ModelLabel, strict: bool) -> Result<(), CliError> {
    model_entry(res, prefix, src, l).or_else(|e| match e {
        // Without an explicit model, models that do not apply are listed as skipped.
        CliError::Precondition(msg) if !strict => {
            res.info(&format!("{prefix}{}-fibers", l.name()), json!({ "skipped": msg }));
            Ok(())
        }
        e => Err(e),
    })
}

fn run_fibrations(res: &mut Results, prefix: &str, src: &Source, labels: &[ModelLabel], strict: bool) -> Result<(), CliError> {
    for &l in labels {
        run_model(res, prefix, src, l, strict)?;
    }
    Ok(())
}

pub fn fibration(req: &Request) -> Result<Results, CliError> {
    let src = need_source(req)?;
    let (labels, strict) = match &req.model {
        Some(name) => {
            let l = ModelLabel::from_name(name).ok_or_else(|| {
                let names: Vec<&str> = ModelLabel::ALL.iter().map(|l| l.name()).collect();
                CliError::Malformed(format!("unknown model {name:?}; expected one of {}", names.join(", ")))
            })?;
            (vec![l], true)
        }
        None => (ModelLabel::ALL.to_vec(), false),
    };
    let mut res = Results::default();
    run_fibrations(&mut res, "", src, &labels, strict)?;
    Ok(res)
}

fn params_checks<F: Field>(p: &QuarticParams<F>, t: &F) -> Result<Vec<Check>, CliError> {
    let mut out = verify_projections(p)?;
    out.extend(verify_symmetries(p, t)?);
    Ok(out)
}

fn isogeny_input_checks(res: &mut Results, prefix: &str, src: &Source, seed: u64) -> Result<(), CliError> {
    if let JPoint::Rational(j) = j_point(src)? {
        if j.is_valid() {
            let c = isogeny_round_trip(&j)?;
            res.check(&Check::new(format!("{prefix}{}", c.name), c.passed, c.detail));
        }
    }
    let t = sample::nonzero_rational(&mut sample::rng(seed), 7);
    let checks = match params_of(src)? {
        Params::Rational(p) => params_checks(&p, &t)?,
        Params::Quadratic(p) => params_checks(&p, &QuadExt::rational(t))?,
    };
    for c in checks {
        res.check(&Check::new(format!("{prefix}{}", c.name), c.passed, c.detail));
    }
    Ok(())
}

pub fn isogeny(req: &Request, verify: bool) -> Result<Results, CliError> {
    let mut res = Results::default();
    if verify || req.source.is_none() {
        res.checks(&isogeny_suite());
    }
    if let Some(src) = &req.source {
        isogeny_input_checks(&mut res, "", src, req.seed.unwrap_or(sample::DEFAULT_SEED))?;
    }
    Ok(res)
}

fn rosenhain_of(src: &Source) -> Result<RosenhainCurve, CliError> {
    match src {
        Source::Rosenhain([a, b, c]) => Ok(RosenhainCurve::new(a.clone(), b.clone(), c.clone())?),
        _ => Err(CliError::Precondition("tangent needs --rosenhain input".into())),
    }
}

pub fn tangent(req: &Request) -> Result<Results, CliError> {
    let curve = rosenhain_of(need_source(req)?)?;
    let conf = curve.tangent_configuration();
    let mut res = Results::default();
    res.info("lines", Value::Array(conf.lines().iter().map(|l| vec_json(l)).collect()));
    res.info("r", conf.do_coordinates().r.to_json());
    res.info("j", vec_json(&configuration_j(&conf).j));
    let ic = igusa_clebsch(&curve.sextic_roots())?;
    res.info(
        "igusa-clebsch",
        json!({ "i2": ic.i2.to_json(), "i4": ic.i4.to_json(), "i6": ic.i6.to_json(), "i10": ic.i10.to_json() }),
    );
    res.info("igusa-j-point", vec_json(&ic.j_point().j));
    res.checks(&restriction_check(&curve)?);
    Ok(res)
}

pub fn params(req: &Request) -> Result<Results, CliError> {
    let src = need_source(req)?;
    if matches!(src, Source::Params(_)) {
        return Err(CliError::Precondition("params solves parameters from a configuration; got parameters".into()));
    }
    let j = configuration_j(&src.configuration()?);
    let solved = solve_params(&j)?;
    let mut res = Results::default();
    let names = ["alpha", "beta", "gamma", "delta", "epsilon", "zeta"];
    let values: Vec<Value> = match &solved {
        SolvedParams::Rational(p) => p.as_array().iter().map(|x| x.to_json()).collect(),
        SolvedParams::Quadratic(p) => p.as_array().iter().map(|x| x.to_json()).collect(),
    };
    let obj: serde_json::Map<String, Value> = names.iter().map(|n| n.to_string()).zip(values).collect();
    res.info("params", Value::Object(obj));
    res.info("radicand", solved.radicand().as_ref().map_or(Value::Null, int_json));
    res.info("j", vec_json(&j.j));
    let ok = solved.matches(&j)?;
    res.check(&Check::new("parameters-reproduce-j", ok, "moduli_match weighted-equal to J"));
    Ok(res)
}

fn prefixed(res: &mut Results, prefix: &str, cs: &[Check]) {
    for c in cs {
        res.check(&Check::new(format!("{prefix}{}", c.name), c.passed, c.detail.clone()));
    }
}

/// The full suite. Without an input, the (2, 3, 4, 5) configuration is used.
pub fn verify_all(req: &Request) -> Result<Results, CliError> {
    let seed = req.seed.unwrap_or(sample::DEFAULT_SEED);
    let samples = req.samples.unwrap_or(DEFAULT_SAMPLES);
    let golden = Source::Moduli(identities::GOLDEN_MODULI.map(rat));
    let src = req.source.as_ref().unwrap_or(&golden);
    let mut res = Results::default();

    prefixed(&mut res, "identities/", &identities::moduli_j_identity(samples, seed));
    prefixed(&mut res, "identities/", &identities::coordinate_identities());
    prefixed(&mut res, "identities/", &[identities::disc_s_identity(samples, seed)]);
    prefixed(&mut res, "identities/", &[identities::res_ab_identity(samples, seed)]);
    prefixed(&mut res, "golden/", &identities::golden_example());
    prefixed(&mut res, "isogeny/", &isogeny_suite());

    if !matches!(src, Source::Params(_)) {
        let c = src.configuration()?;
        prefixed(&mut res, "input/", &c.do_coordinates().verify_relations());
        prefixed(&mut res, "input/", &[identities::s6_invariance(&c)]);
    }
    run_fibrations(&mut res, "input/", src, &ModelLabel::ALL, false)?;
    isogeny_input_checks(&mut res, "input/", src, seed)?;
    if let Source::Rosenhain(_) = src {
        prefixed(&mut res, "input/", &restriction_check(&rosenhain_of(src)?)?);
    }
    Ok(res)
}
