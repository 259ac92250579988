use serde_json::{json, Value};

use super::{AlgebraBuilder, AlgebraError, Family, Generator, LinComb, Parity, SuperAlgebra, Tag};
use crate::scalars::{LaurentScalar, Rational};

pub const SCHEMA_VERSION: u64 = 1;

fn bad(msg: impl Into<String>) -> AlgebraError {
    AlgebraError::Json(msg.into())
}

/// Deterministic JSON value; object keys are sorted by `serde_json::Map`.
pub fn to_json(alg: &SuperAlgebra) -> Value {
    let generators: Vec<Value> = alg
        .generators()
        .iter()
        .map(|g| {
            json!({
                "label": g.label(),
                "family": g.family,
                "indices": g.indices,
                "tag": g.tag,
                "grading": g.parity,
                "massdim": g.massdim.map(|d| d.to_string()),
            })
        })
        .collect();
    let brackets: Vec<Value> = alg
        .brackets()
        .map(|(i, j, lc)| {
            let terms: Vec<Value> = lc
                .iter()
                .map(|(k, c)| json!({"k": k, "coeff": c.to_string()}))
                .collect();
            json!({"i": i, "j": j, "terms": terms})
        })
        .collect();
    json!({
        "schema": SCHEMA_VERSION,
        "name": alg.name(),
        "complex": alg.is_complex(),
        "params": alg.params(),
        "generators": generators,
        "brackets": brackets,
    })
}

pub fn to_json_string(alg: &SuperAlgebra) -> String {
    let mut s = serde_json::to_string_pretty(&to_json(alg)).expect("json values always serialize");
    s.push('\n');
    s
}

pub fn from_json_value(v: &Value) -> Result<SuperAlgebra, AlgebraError> {
    let schema = v
        .get("schema")
        .and_then(Value::as_u64)
        .ok_or_else(|| bad("missing schema"))?;
    if schema != SCHEMA_VERSION {
        return Err(bad(format!("unsupported schema {schema}")));
    }
    let name = v.get("name").and_then(Value::as_str).unwrap_or("imported");
    let mut b = AlgebraBuilder::new(name);
    b.complex(v.get("complex").and_then(Value::as_bool).unwrap_or(false));
    if let Some(params) = v.get("params").and_then(Value::as_object) {
        for (k, val) in params {
            b.param(k.clone(), val.as_str().unwrap_or_default());
        }
    }
    let gens = v
        .get("generators")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("missing generators"))?;
    for g in gens {
        let family: Family = serde_json::from_value(g.get("family").cloned().unwrap_or(Value::Null))
            .map_err(|e| bad(format!("family: {e}")))?;
        let indices: Vec<u8> = serde_json::from_value(g.get("indices").cloned().unwrap_or(json!([])))
            .map_err(|e| bad(format!("indices: {e}")))?;
        let tag: Tag = match g.get("tag") {
            Some(t) => serde_json::from_value(t.clone()).map_err(|e| bad(format!("tag: {e}")))?,
            None => Tag::Plain,
        };
        let parity: Parity = match g.get("grading") {
            Some(p) => serde_json::from_value(p.clone()).map_err(|e| bad(format!("grading: {e}")))?,
            None => family.parity(),
        };
        let massdim = match g.get("massdim") {
            Some(Value::String(s)) => Some(s.parse::<Rational>()?),
            Some(Value::Null) | None => None,
            Some(other) => return Err(bad(format!("massdim must be a string, got {other}"))),
        };
        b.add_generator(Generator {
            family,
            indices,
            tag,
            parity,
            massdim,
        });
    }
    let n = b.dim();
    let brackets = v
        .get("brackets")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("missing brackets"))?;
    for e in brackets {
        let idx = |key: &str| -> Result<usize, AlgebraError> {
            let k = e
                .get(key)
                .and_then(Value::as_u64)
                .ok_or_else(|| bad(format!("bracket missing {key}")))? as usize;
            if k >= n {
                return Err(AlgebraError::UnknownGenerator(format!("#{k}")));
            }
            Ok(k)
        };
        let (i, j) = (idx("i")?, idx("j")?);
        let mut lc = LinComb::zero();
        for t in e
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("bracket missing terms"))?
        {
            let k = t
                .get("k")
                .and_then(Value::as_u64)
                .ok_or_else(|| bad("term missing k"))? as usize;
            if k >= n {
                return Err(AlgebraError::UnknownGenerator(format!("#{k}")));
            }
            let c: LaurentScalar = t
                .get("coeff")
                .and_then(Value::as_str)
                .ok_or_else(|| bad("term missing coeff"))?
                .parse()?;
            lc.add_term(k, c);
        }
        b.add(i, j, lc);
    }
    b.finish()
}

pub fn from_json_str(s: &str) -> Result<SuperAlgebra, AlgebraError> {
    let v: Value = serde_json::from_str(s).map_err(|e| bad(e.to_string()))?;
    from_json_value(&v)
}
