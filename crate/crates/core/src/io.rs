//! JSON input formats for coefficient algebras, group actions and
//! functionals `ψ`, and exact scalar encoding for reports.
//!
//! Scalars are strings such as `"3"`, `"-2/5"` or `"1/2+3*i"`; plain JSON
//! integers are accepted as well. Matrices are lists of rows.

use serde_json::Value;

use crate::cartan::PsiFunctional;
use crate::coeff::{scale_variable, CoeffAlgebra, GammaAction};
use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::queer::Queer;
use crate::scalar::Scalar;

/// Parses JSON text, reporting syntax errors with their line.
pub fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("line {}: {e}", e.line())))
}

/// First line on which `"key"` occurs, for error messages.
pub fn line_of(text: &str, key: &str) -> usize {
    let pat = format!("\"{key}\"");
    text.lines().position(|l| l.contains(&pat)).map_or(1, |i| i + 1)
}

fn err_at(text: &str, key: &str, msg: impl std::fmt::Display) -> Error {
    let msg = msg.to_string();
    let msg = msg.strip_prefix("parse error: ").unwrap_or(&msg);
    Error::Parse(format!("line {}: {msg}", line_of(text, key)))
}

pub fn scalar_from_json(v: &Value) -> Result<Scalar> {
    match v {
        Value::String(s) => s.parse(),
        Value::Number(n) => n
            .as_i64()
            .map(Scalar::from_int)
            .ok_or_else(|| Error::Parse(format!("number {n} is not an integer; use a \"p/q\" string"))),
        _ => Err(Error::Parse(format!("expected a scalar, found {v}"))),
    }
}

pub fn scalar_to_json(s: &Scalar) -> Value {
    Value::String(s.to_string())
}

fn scalars(text: &str, key: &str, v: Option<&Value>) -> Result<Vec<Scalar>> {
    let arr = v.and_then(Value::as_array).ok_or_else(|| err_at(text, key, format!("`{key}` must be a list of scalars")))?;
    arr.iter().map(scalar_from_json).collect::<Result<Vec<_>>>().map_err(|e| err_at(text, key, e))
}

fn matrix(text: &str, key: &str, v: &Value, size: usize) -> Result<Mat> {
    let rows = v.as_array().ok_or_else(|| err_at(text, key, "matrix must be a list of rows"))?;
    if rows.len() != size {
        return Err(err_at(text, key, format!("matrix must have {size} rows")));
    }
    let mut dense = Vec::with_capacity(size);
    for r in rows {
        let r = scalars(text, key, Some(r))?;
        if r.len() != size {
            return Err(err_at(text, key, format!("matrix rows must have {size} entries")));
        }
        dense.push(r);
    }
    Ok(Mat::from_dense(&dense))
}

/// `{"type": "poly_quotient" | "laurent_quotient", "modulus": [...], "roots": [...]}`,
/// `{"type": "points", "k": 3}` or `{"type": "preset", "name": "two_point"}`.
pub fn algebra_from_value(text: &str, v: &Value) -> Result<CoeffAlgebra> {
    let ty = v.get("type").and_then(Value::as_str).ok_or_else(|| err_at(text, "type", "missing string field `type`"))?;
    match ty {
        "poly_quotient" | "laurent_quotient" => {
            let m = scalars(text, "modulus", v.get("modulus"))?;
            let r = scalars(text, "roots", v.get("roots"))?;
            let a =
                if ty == "poly_quotient" { CoeffAlgebra::poly_quotient(&m, &r) } else { CoeffAlgebra::laurent_quotient(&m, &r) };
            a.map_err(|e| err_at(text, "roots", e))
        }
        "points" => {
            let k = v
                .get("k")
                .and_then(Value::as_u64)
                .filter(|k| *k > 0)
                .ok_or_else(|| err_at(text, "k", "`k` must be a positive integer"))?;
            Ok(CoeffAlgebra::points(k as usize))
        }
        "preset" => {
            let name = v.get("name").and_then(Value::as_str).unwrap_or("");
            CoeffAlgebra::preset(name).ok_or_else(|| err_at(text, "name", format!("unknown preset `{name}`")))
        }
        other => Err(err_at(text, "type", format!("unknown algebra type `{other}`"))),
    }
}

pub fn parse_algebra(text: &str) -> Result<CoeffAlgebra> {
    algebra_from_value(text, &parse_json(text)?)
}

/// `{"generators": [{"order": 2, "on_a": A, "on_g": G}, ...]}` where `A` is
/// a matrix, `"identity"` or `{"scale": c}` for `t -> c t`, and `G` is a matrix,
/// `"identity"`, `"sign_conjugation"` or `{"conjugation": S}`.
pub fn parse_group(text: &str, a: &CoeffAlgebra, q: &Queer) -> Result<GammaAction> {
    let v = parse_json(text)?;
    let gens =
        v.get("generators").and_then(Value::as_array).ok_or_else(|| err_at(text, "generators", "missing list `generators`"))?;
    let (da, dg) = (a.dim(), q.dim());
    let mut act = GammaAction { orders: Vec::new(), on_a: Vec::new(), on_g: Vec::new() };
    for g in gens {
        let order = g
            .get("order")
            .and_then(Value::as_u64)
            .filter(|o| *o > 0)
            .ok_or_else(|| err_at(text, "order", "`order` must be a positive integer"))?;
        let on_a = match g.get("on_a") {
            Some(Value::Object(o)) if o.contains_key("scale") => {
                if a.t().is_none() {
                    return Err(err_at(text, "scale", "`scale` needs a polynomial model"));
                }
                scale_variable(a, &scalar_from_json(&o["scale"]).map_err(|e| err_at(text, "scale", e))?)
            }
            Some(Value::String(s)) if s == "identity" => Mat::identity(da),
            Some(m) => matrix(text, "on_a", m, da)?,
            None => return Err(err_at(text, "on_a", "missing `on_a`")),
        };
        let on_g = match g.get("on_g") {
            Some(Value::String(s)) if s == "identity" => Mat::identity(dg),
            Some(Value::String(s)) if s == "sign_conjugation" => q.sign_conjugation(),
            Some(Value::Object(o)) if o.contains_key("conjugation") => {
                let s = matrix(text, "conjugation", &o["conjugation"], q.n + 1)?;
                q.conjugation(&s).map_err(|e| err_at(text, "conjugation", e))?
            }
            Some(m @ Value::Array(_)) => matrix(text, "on_g", m, dg)?,
            _ => {
                return Err(err_at(
                    text,
                    "on_g",
                    "`on_g` must be a matrix, \"identity\", \"sign_conjugation\" or {\"conjugation\": S}",
                ))
            }
        };
        act.orders.push(order as usize);
        act.on_a.push(on_a);
        act.on_g.push(on_g);
    }
    Ok(act)
}

/// `{"n": 2, "algebra": {...}, "triples": [["h1", "1", "3"], ...]}`: values
/// `ψ(h_k⊗a)` on basis labels; `algebra` defaults to `C`.
pub fn parse_psi(text: &str) -> Result<PsiFunctional> {
    let v = parse_json(text)?;
    let n = v
        .get("n")
        .and_then(Value::as_u64)
        .filter(|n| *n > 0)
        .ok_or_else(|| err_at(text, "n", "`n` must be a positive integer"))?;
    let a = match v.get("algebra") {
        Some(av) => algebra_from_value(text, av)?,
        None => CoeffAlgebra::complex(),
    };
    let arr = v.get("triples").and_then(Value::as_array).ok_or_else(|| err_at(text, "triples", "missing list `triples`"))?;
    let mut triples = Vec::with_capacity(arr.len());
    for t in arr {
        let t = t
            .as_array()
            .filter(|t| t.len() == 3)
            .ok_or_else(|| err_at(text, "triples", "each triple is [h-label, A-label, scalar]"))?;
        let (Some(h), Some(b)) = (t[0].as_str(), t[1].as_str()) else {
            return Err(err_at(text, "triples", "labels must be strings"));
        };
        let c = scalar_from_json(&t[2]).map_err(|e| err_at(text, "triples", e))?;
        triples.push((h.to_string(), b.to_string(), c));
    }
    PsiFunctional::from_triples(n as usize, &a, &triples).map_err(|e| err_at(text, "triples", e))
}

pub fn psi_to_json(psi: &PsiFunctional) -> Value {
    let da = psi.dim_a();
    let triples: Vec<Value> = (0..psi.n)
        .flat_map(|k| (0..da).map(move |j| (k, j)))
        .filter(|(k, j)| !psi.values[k * da + j].is_zero())
        .map(|(k, j)| serde_json::json!([format!("h{}", k + 1), psi.a.labels[j], scalar_to_json(&psi.values[k * da + j])]))
        .collect();
    serde_json::json!({ "n": psi.n, "triples": triples })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn algebra_roundtrip() {
        let a = parse_algebra(r#"{"type": "poly_quotient", "modulus": ["-1", 0, "1"], "roots": [1, "-1"]}"#).unwrap();
        assert_eq!((a.dim(), a.points.len()), (2, 2));
        let b = parse_algebra(r#"{"type": "preset", "name": "four_point"}"#).unwrap();
        assert_eq!(b.points.len(), 4);
        assert_eq!(parse_algebra(r#"{"type": "points", "k": 3}"#).unwrap().dim(), 3);
    }

    #[test]
    fn errors_carry_lines() {
        let e = parse_algebra("{\n\"type\": \"poly_quotient\",\n\"modulus\": [\"-1\", 0, 1],\n\"roots\": [\"2\", \"-1\"]\n}")
            .unwrap_err();
        assert!(e.to_string().contains("line 4"), "{e}");
        let e = parse_algebra("{\n\"type\": \n").unwrap_err();
        assert!(e.to_string().contains("line 3"), "{e}");
        let e = parse_algebra("{\"type\": \"preset\", \"name\": \"nowhere\"}").unwrap_err();
        assert!(e.to_string().contains("unknown preset"));
    }

    #[test]
    fn group_and_psi() {
        let q = Queer::new(2);
        let a = CoeffAlgebra::four_point();
        let g = parse_group(r#"{"generators": [{"order": 2, "on_a": {"scale": "-1"}, "on_g": "sign_conjugation"}]}"#, &a, &q)
            .unwrap();
        let r = g.validate(&a, &q.g);
        assert!(r.valid() && r.free);
        let g = parse_group(
            r#"{"generators": [{"order": 2, "on_a": {"scale": -1}, "on_g": {"conjugation": [[1,0,0],[0,1,0],[0,0,-1]]}}]}"#,
            &a,
            &q,
        )
        .unwrap();
        assert_eq!(g.on_g[0], q.sign_conjugation());
        let psi = parse_psi(r#"{"n": 2, "triples": [["h1", "1", "1"], ["h2", "1", "1/2+i"]]}"#).unwrap();
        assert_eq!(psi.lambda(), vec![Scalar::one(), "1/2+i".parse().unwrap()]);
        let back = psi_to_json(&psi);
        assert_eq!(back["triples"][1][2], "1/2+1*i");
        assert!(parse_psi(r#"{"n": 2, "triples": [["h9", "1", "1"]]}"#).is_err());
    }
}
