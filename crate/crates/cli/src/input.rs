//! Requests from flags or from strict JSON.

use crate::json::field_json;
use crate::CliError;
use num_bigint::BigInt;
use serde_json::{json, Map, Value};
use sixlines_algebra::{parse_rational, QuadExt, Rational};
use sixlines_core::configuration::Configuration;
use sixlines_core::isogeny::QuarticParams;

#[derive(Clone, Debug)]
pub enum Params {
    Rational(QuarticParams),
    Quadratic(QuarticParams<QuadExt>),
}

#[derive(Clone, Debug)]
pub enum Source {
    Lines([[Rational; 3]; 6]),
    Moduli([Rational; 4]),
    Rosenhain([Rational; 3]),
    Params(Params),
}

#[derive(Clone, Debug, Default)]
pub struct Request {
    pub source: Option<Source>,
    pub model: Option<String>,
    pub seed: Option<u64>,
    pub samples: Option<usize>,
}

const KEYS: [&str; 8] = ["lines", "moduli", "rosenhain", "params", "radicand", "model", "seed", "samples"];

fn malformed(msg: impl Into<String>) -> CliError {
    CliError::Malformed(msg.into())
}

pub fn rational_token(s: &str) -> Result<Rational, CliError> {
    parse_rational(s).map_err(|_| malformed(format!("not a rational: {s:?}")))
}

fn rational_value(v: &Value) -> Result<Rational, CliError> {
    match v {
        Value::String(s) => rational_token(s),
        Value::Number(n) if n.is_i64() => Ok(Rational::from_integer(n.as_i64().unwrap().into())),
        other => Err(malformed(format!("expected a rational string, got {other}"))),
    }
}

fn rationals<const N: usize>(v: &Value, what: &str) -> Result<[Rational; N], CliError> {
    let arr = v.as_array().ok_or_else(|| malformed(format!("{what} must be an array")))?;
    if arr.len() != N {
        return Err(malformed(format!("{what} needs {N} entries, got {}", arr.len())));
    }
    let out: Vec<Rational> = arr.iter().map(rational_value).collect::<Result<_, _>>()?;
    Ok(out.try_into().expect("length checked"))
}

fn quad(base: Rational, coeff: Rational, d: &BigInt) -> Result<QuadExt, CliError> {
    QuadExt::new(base, coeff, d).map_err(|e| CliError::Precondition(e.to_string()))
}

/// `"p/q"`, or `"p/q:r/s"` for `p/q + (r/s)·√D`.
pub fn quad_token(s: &str, d: &BigInt) -> Result<QuadExt, CliError> {
    match s.split_once(':') {
        Some((b, c)) => quad(rational_token(b)?, rational_token(c)?, d),
        None => Ok(QuadExt::rational(rational_token(s)?)),
    }
}

fn quad_value(v: &Value, d: &BigInt) -> Result<QuadExt, CliError> {
    let Some(obj) = v.as_object() else {
        return Ok(QuadExt::rational(rational_value(v)?));
    };
    for k in obj.keys() {
        if !["base", "coeff", "D"].contains(&k.as_str()) {
            return Err(malformed(format!("unknown field {k:?} in quadratic value")));
        }
    }
    let get = |k: &str| obj.get(k).ok_or_else(|| malformed(format!("quadratic value lacks {k:?}")));
    let own = get("D")?.as_i64().ok_or_else(|| malformed("\"D\" must be an integer"))?;
    if BigInt::from(own) != *d {
        return Err(malformed(format!("value radicand {own} differs from request radicand {d}")));
    }
    quad(rational_value(get("base")?)?, rational_value(get("coeff")?)?, d)
}

pub fn params_from_tokens(tokens: &[String], radicand: Option<i64>) -> Result<Params, CliError> {
    if tokens.len() != 6 {
        return Err(malformed(format!("--params needs 6 values, got {}", tokens.len())));
    }
    Ok(match radicand {
        None => {
            let v: Vec<Rational> = tokens.iter().map(|s| rational_token(s)).collect::<Result<_, _>>()?;
            let [a, b, c, d, e, z]: [Rational; 6] = v.try_into().expect("six");
            Params::Rational(QuarticParams::new(a, b, c, d, e, z))
        }
        Some(d) => {
            let d = BigInt::from(d);
            let v: Vec<QuadExt> = tokens.iter().map(|s| quad_token(s, &d)).collect::<Result<_, _>>()?;
            let [a, b, c, dd, e, z]: [QuadExt; 6] = v.try_into().expect("six");
            Params::Quadratic(QuarticParams::new(a, b, c, dd, e, z))
        }
    })
}

fn params_from_json(v: &Value, radicand: Option<&Value>) -> Result<Params, CliError> {
    let arr = v.as_array().ok_or_else(|| malformed("params must be an array"))?;
    if arr.len() != 6 {
        return Err(malformed(format!("params needs 6 entries, got {}", arr.len())));
    }
    let found = arr.iter().find_map(|x| x.get("D").and_then(Value::as_i64));
    let d = match radicand {
        Some(r) => Some(r.as_i64().ok_or_else(|| malformed("radicand must be an integer"))?),
        None => found,
    };
    match d {
        None => Ok(Params::Rational({
            let [a, b, c, dd, e, z] = rationals::<6>(v, "params")?;
            QuarticParams::new(a, b, c, dd, e, z)
        })),
        Some(d) => {
            let d = BigInt::from(d);
            let vals: Vec<QuadExt> = arr.iter().map(|x| quad_value(x, &d)).collect::<Result<_, _>>()?;
            let [a, b, c, dd, e, z]: [QuadExt; 6] = vals.try_into().expect("six");
            Ok(Params::Quadratic(QuarticParams::new(a, b, c, dd, e, z)))
        }
    }
}

pub fn parse_json_request(text: &str) -> Result<Request, CliError> {
    let v: Value = serde_json::from_str(text).map_err(|e| malformed(format!("invalid JSON: {e}")))?;
    let obj = v.as_object().ok_or_else(|| malformed("request must be a JSON object"))?;
    for k in obj.keys() {
        if !KEYS.contains(&k.as_str()) {
            return Err(malformed(format!("unknown field {k:?}")));
        }
    }
    let mut sources = Vec::new();
    if let Some(l) = obj.get("lines") {
        let rows = l.as_array().ok_or_else(|| malformed("lines must be an array"))?;
        if rows.len() != 6 {
            return Err(malformed(format!("lines needs 6 entries, got {}", rows.len())));
        }
        let parsed: Vec<[Rational; 3]> = rows.iter().map(|r| rationals::<3>(r, "line")).collect::<Result<_, _>>()?;
        sources.push(Source::Lines(parsed.try_into().expect("six")));
    }
    if let Some(m) = obj.get("moduli") {
        sources.push(Source::Moduli(rationals::<4>(m, "moduli")?));
    }
    if let Some(r) = obj.get("rosenhain") {
        sources.push(Source::Rosenhain(rationals::<3>(r, "rosenhain")?));
    }
    if let Some(p) = obj.get("params") {
        sources.push(Source::Params(params_from_json(p, obj.get("radicand"))?));
    } else if obj.contains_key("radicand") {
        return Err(malformed("radicand is only meaningful with params"));
    }
    if sources.len() > 1 {
        return Err(malformed("exactly one input source is allowed"));
    }
    let model = match obj.get("model") {
        None => None,
        Some(Value::String(s)) => Some(s.clone()),
        Some(_) => return Err(malformed("model must be a string")),
    };
    let uint = |k: &str| -> Result<Option<u64>, CliError> {
        match obj.get(k) {
            None => Ok(None),
            Some(x) => x.as_u64().map(Some).ok_or_else(|| malformed(format!("{k} must be a non-negative integer"))),
        }
    };
    Ok(Request { source: sources.pop(), model, seed: uint("seed")?, samples: uint("samples")?.map(|n| n as usize) })
}

impl Source {
    pub fn configuration(&self) -> Result<Configuration, CliError> {
        match self {
            Source::Lines(l) => Ok(Configuration::from_lines(l.clone())?),
            Source::Moduli([a, b, c, d]) => Ok(Configuration::from_moduli(a.clone(), b.clone(), c.clone(), d.clone())),
            Source::Rosenhain([a, b, c]) => Ok(Configuration::from_rosenhain(a.clone(), b.clone(), c.clone())?),
            Source::Params(_) => Err(CliError::Precondition("this command needs a line configuration, not quartic parameters".into())),
        }
    }

    pub fn echo(&self) -> Value {
        let strs = |v: &[Rational]| Value::Array(v.iter().map(|x| json!(x.to_string())).collect());
        let mut m = Map::new();
        match self {
            Source::Lines(l) => {
                m.insert("lines".into(), Value::Array(l.iter().map(|r| strs(r)).collect()));
            }
            Source::Moduli(v) => {
                m.insert("moduli".into(), strs(v));
            }
            Source::Rosenhain(v) => {
                m.insert("rosenhain".into(), strs(v));
            }
            Source::Params(Params::Rational(p)) => {
                m.insert("params".into(), Value::Array(p.as_array().iter().map(|x| field_json(*x)).collect()));
            }
            Source::Params(Params::Quadratic(p)) => {
                m.insert("params".into(), Value::Array(p.as_array().iter().map(|x| field_json(*x)).collect()));
            }
        }
        Value::Object(m)
    }
}
