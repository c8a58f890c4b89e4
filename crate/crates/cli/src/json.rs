//! JSON encodings. Integers are written as exact JSON numbers of any
//! length, so a `BnElement` survives a round trip bit for bit.

use kwbn::classifying::{BglPresentation, Part, RingPresentation};
use kwbn::euler::ConsistencyReport;
use kwbn::rep::{Decomposition, IrrepLabel};
use kwbn::{BnElement, GammaScalar, Twist};
use num_bigint::BigInt;
use serde_json::{json, Map, Number, Value};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum JsonError {
    #[error("malformed JSON: {0}")]
    Syntax(String),
    #[error("field `{0}` is missing or has the wrong type")]
    Field(&'static str),
    #[error("{0}")]
    Invalid(String),
}

pub fn number(n: &BigInt) -> Value {
    // arbitrary_precision keeps the digits verbatim
    Value::Number(n.to_string().parse::<Number>().expect("an integer is a JSON number"))
}

fn integer(v: &Value, field: &'static str) -> Result<BigInt, JsonError> {
    let Value::Number(n) = v else {
        return Err(JsonError::Field(field));
    };
    n.as_str().parse::<BigInt>().map_err(|_| JsonError::Field(field))
}

fn small<T: TryFrom<i64>>(v: &Value, field: &'static str) -> Result<T, JsonError> {
    v.as_i64().and_then(|x| T::try_from(x).ok()).ok_or(JsonError::Field(field))
}

pub fn twist_code(t: Twist) -> u8 {
    t.as_u8()
}

/// `{"twist": 0|1, "cap": n, "terms": [{"e": j, "gamma": [[k, c], …]}, …]}`
/// with `e` and `k` ascending.
pub fn bn_to_json(x: &BnElement) -> Value {
    let terms: Vec<Value> = x
        .terms()
        .map(|(e, c)| {
            let gamma: Vec<Value> = c.terms().map(|(k, v)| json!([k, number(v)])).collect();
            json!({ "e": e, "gamma": gamma })
        })
        .collect();
    json!({ "twist": x.twist().as_u8(), "cap": x.cap(), "terms": terms })
}

/// Inverse of [`bn_to_json`]. Only canonical input is accepted: sorted,
/// without repeats, zero coefficients or exponents above the cap.
pub fn bn_from_json(v: &Value) -> Result<BnElement, JsonError> {
    let twist = match v.get("twist").and_then(Value::as_u64) {
        Some(0) => Twist::Untwisted,
        Some(1) => Twist::Twisted,
        _ => return Err(JsonError::Field("twist")),
    };
    let cap: u32 = small(v.get("cap").ok_or(JsonError::Field("cap"))?, "cap")?;
    let terms = v.get("terms").and_then(Value::as_array).ok_or(JsonError::Field("terms"))?;
    let mut out = Vec::with_capacity(terms.len());
    let mut last_e: Option<u32> = None;
    for t in terms {
        let e: u32 = small(t.get("e").ok_or(JsonError::Field("e"))?, "e")?;
        if last_e.is_some_and(|l| l >= e) {
            return Err(JsonError::Invalid("terms must have strictly increasing e".into()));
        }
        if e > cap {
            return Err(JsonError::Invalid(format!("exponent {e} exceeds cap {cap}")));
        }
        last_e = Some(e);
        let pairs = t.get("gamma").and_then(Value::as_array).ok_or(JsonError::Field("gamma"))?;
        if pairs.is_empty() {
            return Err(JsonError::Invalid(format!("term e^{e} has no coefficient")));
        }
        let mut coeffs = Vec::with_capacity(pairs.len());
        let mut last_k: Option<i64> = None;
        for p in pairs {
            let [k, c] = p.as_array().map(Vec::as_slice).unwrap_or_default() else {
                return Err(JsonError::Field("gamma"));
            };
            let k: i64 = small(k, "gamma")?;
            let c = integer(c, "gamma")?;
            if last_k.is_some_and(|l| l >= k) {
                return Err(JsonError::Invalid("gamma pairs must have strictly increasing exponents".into()));
            }
            if c == BigInt::from(0) {
                return Err(JsonError::Invalid("zero coefficient".into()));
            }
            last_k = Some(k);
            coeffs.push((k, c));
        }
        out.push((e, GammaScalar::from_terms(coeffs)));
    }
    Ok(BnElement::from_terms(twist, cap, out))
}

pub fn bn_from_str(s: &str) -> Result<BnElement, JsonError> {
    let v: Value = serde_json::from_str(s).map_err(|e| JsonError::Syntax(e.to_string()))?;
    bn_from_json(&v)
}

pub fn report_to_json(r: &ConsistencyReport) -> Value {
    let derived: Map<String, Value> = r.derived.iter().map(|(k, v)| (k.clone(), bn_to_json(v))).collect();
    json!({
        "identity": r.identity.to_string(),
        "lhs": bn_to_json(&r.lhs),
        "rhs": bn_to_json(&r.rhs),
        "holds": r.holds,
        "residual": bn_to_json(&r.residual),
        "summands": r.decomposition.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "derived": derived,
        "warnings": r.warnings,
    })
}

fn label_json(l: IrrepLabel, multiplicity: usize) -> Value {
    let mut obj = json!({ "label": l.to_string(), "rank": l.rank(), "multiplicity": multiplicity });
    if let IrrepLabel::TwoDim(m, o) = l {
        obj["m"] = json!(m);
        obj["orientation"] = json!(o.symbol().to_string());
    }
    obj["det_twist"] = json!(l.determinant_twist().as_u8());
    obj
}

/// Summands with multiplicity, in canonical order.
pub fn decomposition_to_json(expr: &str, dim: usize, d: &Decomposition) -> Value {
    let summands: Vec<Value> = d.multiplicities().into_iter().map(|(l, n)| label_json(l, n)).collect();
    json!({ "expr": expr, "dimension": dim, "summands": summands })
}

pub fn presentation_to_json(p: &RingPresentation) -> Value {
    let gens: Vec<Value> = p
        .generators()
        .iter()
        .map(|g| json!({ "name": g.name, "degree": g.degree, "twist": g.twist.as_u8() }))
        .collect();
    let part = match p.part() {
        Part::Untwisted => json!({ "kind": "untwisted" }),
        Part::Twisted { unit } => json!({ "kind": "twisted", "unit": unit }),
    };
    json!({ "generators": gens, "cap": p.cap(), "part": part })
}

pub fn bgl_to_json(b: &BglPresentation) -> Value {
    json!({
        "untwisted": presentation_to_json(&b.untwisted),
        "twisted": b.twisted.as_ref().map(presentation_to_json),
    })
}
