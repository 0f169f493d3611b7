//! Exact values as JSON: rationals as `"p/q"`, irrational elements of `Q(√D)`
//! as `{"base", "coeff", "D"}`, polynomials as coefficient arrays lowest-first.

use num_bigint::BigInt;
use serde_json::{json, Map, Value};
use sixlines_algebra::{Field, QuadExt, Rational, UniPoly};
use sixlines_core::check::Check;
use sixlines_core::fibration::{FiberReport, Place, WeierstrassModel};

pub trait ToJson {
    fn to_json(&self) -> Value;
}

impl ToJson for Rational {
    fn to_json(&self) -> Value {
        json!(self.to_string())
    }
}

impl ToJson for QuadExt {
    fn to_json(&self) -> Value {
        match self.radicand().filter(|_| self.to_rational().is_none()) {
            None => json!(self.base().to_string()),
            Some(d) => json!({
                "base": self.base().to_string(),
                "coeff": self.coeff().to_string(),
                "D": int_json(d),
            }),
        }
    }
}

/// Integers that fit in `i64` as JSON numbers, larger ones as strings.
pub fn int_json(d: &BigInt) -> Value {
    i64::try_from(d).map_or_else(|_| json!(d.to_string()), |n| json!(n))
}

pub fn field_json<F: ToJson>(x: &F) -> Value {
    x.to_json()
}

pub fn vec_json<F: ToJson>(v: &[F]) -> Value {
    Value::Array(v.iter().map(ToJson::to_json).collect())
}

pub fn poly_json<F: ToJson + Field>(p: &UniPoly<F>) -> Value {
    vec_json(p.coeffs())
}

pub fn model_json<F: ToJson + Field>(m: &WeierstrassModel<F>) -> Value {
    json!({ "a2": poly_json(&m.a2), "a4": poly_json(&m.a4), "a6": poly_json(&m.a6) })
}

pub fn fibers_json<F: ToJson + Field>(r: &FiberReport<F>) -> Value {
    let fibers: Vec<Value> = r
        .fibers
        .iter()
        .map(|f| {
            let place = match &f.place {
                Place::Finite(p) => poly_json(p),
                Place::Infinity => json!("inf"),
            };
            json!({
                "type": f.kind.to_string(),
                "place": place,
                "count": f.count,
                "orders": { "f": f.orders.f, "g": f.orders.g, "disc": f.orders.disc },
            })
        })
        .collect();
    Value::Array(fibers)
}

/// Result entries keyed by name.
#[derive(Default)]
pub struct Results {
    map: Map<String, Value>,
    failed: bool,
}

impl Results {
    pub fn info(&mut self, name: &str, value: Value) {
        self.map.insert(name.into(), json!({ "status": "info", "value": value }));
    }

    pub fn check(&mut self, c: &Check) {
        self.failed |= !c.passed;
        let status = if c.passed { "pass" } else { "fail" };
        self.map.insert(c.name.clone(), json!({ "status": status, "detail": c.detail }));
    }

    pub fn checks(&mut self, cs: &[Check]) {
        for c in cs {
            self.check(c);
        }
    }

    /// A check carrying a value alongside its status.
    pub fn check_with(&mut self, c: &Check, value: Value) {
        self.failed |= !c.passed;
        let status = if c.passed { "pass" } else { "fail" };
        self.map.insert(c.name.clone(), json!({ "status": status, "detail": c.detail, "value": value }));
    }

    pub fn failed(&self) -> bool {
        self.failed
    }

    pub fn into_value(self) -> Value {
        Value::Object(self.map)
    }
}
