//! Browser bindings for the demo page in `www/`.
//!
//! Every exported function returns a JSON string; failures come back as
//! `{"error": "..."}` so the page never has to catch exceptions.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use hooklab::cores::{delta_profile, pair_to_dd, pair_weight, varphi, varphi_inv};
use hooklab::hooks::{no_rhs, type_c_rhs};
use hooklab::macdonald::{macdonald_series, verify_macdonald, Family};
use hooklab::partition::parse_int_list;
use hooklab::series::{eta_power, exponent_string, fraction_string, power_product, Series};
use hooklab::{Partition, Report};

const MAX_ORDER: usize = 40;

fn to_json(result: Result<Value, String>) -> String {
    match result {
        Ok(v) => v.to_string(),
        Err(e) => json!({ "error": e }).to_string(),
    }
}

fn check_order(order: usize) -> Result<(), String> {
    if order > MAX_ORDER {
        return Err(format!(
            "order is capped at {MAX_ORDER} in the browser demo"
        ));
    }
    Ok(())
}

fn series_value(s: &Series) -> Value {
    let terms: Vec<Value> = (0..=s.order())
        .map(|k| {
            let c = s.coeff(k);
            json!({
                "exponent": exponent_string(&s.exponent(k)),
                "coefficient": fraction_string(c),
                // approximate magnitude for plotting only
                "approx": c.numer().to_string().parse::<f64>().unwrap_or(f64::NAN)
                    / c.denom().to_string().parse::<f64>().unwrap_or(f64::NAN),
            })
        })
        .collect();
    json!({ "offset": exponent_string(s.offset()), "order": s.order(), "terms": terms })
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse::<Family>().map_err(|e| e.to_string())
}

/// Series for one of `eta-power` (param = e), `no-rhs` (param = z),
/// `type-c-rhs` (param = t) or `macdonald` (param = t, with `family`).
pub fn expand_value(kind: &str, param: i64, family: &str, order: usize) -> Result<Value, String> {
    check_order(order)?;
    let series = match kind {
        "eta-power" => eta_power(param, order),
        "no-rhs" => no_rhs(param, order.min(20)),
        "type-c-rhs" => type_c_rhs(param, order.min(20)),
        "macdonald" => {
            let t = usize::try_from(param).map_err(|_| "t must be positive".to_string())?;
            macdonald_series(parse_family(family)?, t, order).map_err(|e| e.to_string())?
        }
        other => return Err(format!("unknown series {other:?}")),
    };
    Ok(series_value(&series))
}

fn diagram(p: &Partition) -> Value {
    json!({ "text": p.to_string(), "parts": p.parts(), "weight": p.weight() })
}

/// The pair of `(t+1)`-cores attached to a vector of length `t`, its
/// doubled distinct image, and the table relating principal hooks to the
/// vector entries.
pub fn pair_value(vector: &str, t: usize) -> Result<Value, String> {
    if t == 0 || t > 8 {
        return Err("t must be between 1 and 8".into());
    }
    let v = parse_int_list(vector).map_err(|e| e.to_string())?;
    if v.iter().any(|x| x.abs() > 6) {
        return Err("entries are capped at 6 in absolute value".into());
    }
    let pair = varphi_inv(&v, t).map_err(|e| e.to_string())?;
    let back = varphi(&pair, t).map_err(|e| e.to_string())?;
    let profile = delta_profile(&pair, t);
    let m = t as i64 + 1;
    let rows: Vec<Value> = profile
        .delta_i
        .iter()
        .zip(&profile.sigma)
        .enumerate()
        .map(|(k, (&d, s))| {
            let i = k as i64 + 1;
            json!({
                "i": i,
                "delta_i": d,
                "sigma_i": s.to_i64(),
                "lhs": m + d,
                "rhs": s.to_i64() * (2 * m * v[k] + i),
            })
        })
        .collect();
    Ok(json!({
        "t": t,
        "vector": back.to_string(),
        "lambda": diagram(pair.lambda()),
        "mu": diagram(pair.mu()),
        "nu": diagram(&pair_to_dd(&pair)),
        "principal_hooks": profile.delta,
        "weight": pair.weight(),
        "weight_law": pair_weight(&v, t),
        "delta_table": rows,
    }))
}

/// A verification report for `type-c` (the doubled distinct hook sum at
/// rank `t`) or `macdonald` (with `family`).
pub fn verify_value(target: &str, family: &str, t: i64, order: usize) -> Result<Value, String> {
    check_order(order)?;
    let report = match target {
        "type-c" => {
            let order = order.min(20);
            let mut r = Report::new(format!("verify type-c --t {t} --order {order}"));
            r.compare_series(
                "doubled distinct sum",
                &power_product(2 * t * t + t, order),
                &type_c_rhs(t, order),
            );
            r
        }
        "macdonald" => {
            let t = usize::try_from(t).map_err(|_| "t must be positive".to_string())?;
            verify_macdonald(parse_family(family)?, t, order).map_err(|e| e.to_string())?
        }
        other => return Err(format!("unknown target {other:?}")),
    };
    serde_json::to_value(report).map_err(|e| e.to_string())
}

#[wasm_bindgen]
pub fn expand(kind: &str, param: i32, family: &str, order: u32) -> String {
    to_json(expand_value(kind, param as i64, family, order as usize))
}

#[wasm_bindgen]
pub fn pair_from_vector(vector: &str, t: u32) -> String {
    to_json(pair_value(vector, t as usize))
}

#[wasm_bindgen]
pub fn verify(target: &str, family: &str, t: i32, order: u32) -> String {
    to_json(verify_value(target, family, t as i64, order as usize))
}
