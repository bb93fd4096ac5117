//! JSON encodings. Integer coefficients are decimal strings so nothing is
//! lost to floating point on the way through a JSON parser.

use num_bigint::BigInt;
use serde_json::{json, Value};

use super::cyclotomic::CyclotomicScalar;
use crate::error::{Error, Result};
use crate::{BivariateLaurent, CyclotomicLaurent, UnivariateLaurent};

/// `[[e_q, e_s, "c"], ...]` sorted by `(e_q, e_s)`.
pub fn bivariate_to_json(p: &BivariateLaurent) -> Value {
    Value::Array(p.terms().map(|(e, c)| json!([e[0], e[1], c.to_string()])).collect())
}

/// A polynomial in `q` alone, as triples with `e_s = 0`.
pub fn q_poly_to_json(p: &UnivariateLaurent) -> Value {
    Value::Array(p.terms().map(|(e, c)| json!([e, 0, c.to_string()])).collect())
}

/// A polynomial in a single named variable, as `[e, "c"]` pairs.
pub fn univariate_to_json(p: &UnivariateLaurent) -> Value {
    Value::Array(p.terms().map(|(e, c)| json!([e, c.to_string()])).collect())
}

pub fn cyclotomic_scalar_to_json(c: &CyclotomicScalar) -> Value {
    json!({
        "order": c.order(),
        "coeffs": c.coeffs().iter().map(|x| x.to_string()).collect::<Vec<_>>(),
    })
}

/// `[[e_s, {order, coeffs}], ...]`
pub fn cyclotomic_laurent_to_json(p: &CyclotomicLaurent, order: u32) -> Value {
    Value::Array(
        p.terms()
            .map(|(e, c)| {
                let mut v = cyclotomic_scalar_to_json(c);
                v["order"] = json!(order);
                json!([e, v])
            })
            .collect(),
    )
}

pub fn bivariate_from_json(v: &Value) -> Result<BivariateLaurent> {
    let bad = || Error::Parse(format!("not a polynomial triple list: {v}"));
    let arr = v.as_array().ok_or_else(bad)?;
    let mut out = BivariateLaurent::default();
    for t in arr {
        let t = t.as_array().filter(|t| t.len() == 3).ok_or_else(bad)?;
        let eq = t[0].as_i64().ok_or_else(bad)? as i32;
        let es = t[1].as_i64().ok_or_else(bad)? as i32;
        let c: BigInt = t[2].as_str().and_then(|s| s.parse().ok()).ok_or_else(bad)?;
        out.add_term([eq, es], &c);
    }
    Ok(out)
}
