//! JSON forms of polynomials, elements and errors. Every top-level document
//! carries `"v": 1`.

use metabelian_core::commod::{CollectedPart, CommIndex};
use metabelian_core::{BigInt, Element, Error, LaurentPoly, Monomial};
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

pub const SCHEMA_VERSION: u64 = 1;

/// Wraps a payload object with the schema version.
pub fn envelope(mut body: Map<String, Value>) -> Value {
    body.insert("v".into(), json!(SCHEMA_VERSION));
    Value::Object(body)
}

pub fn doc(pairs: impl IntoIterator<Item = (&'static str, Value)>) -> Value {
    envelope(pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect())
}

/// Integers that fit in `i64` are JSON numbers, larger ones decimal strings.
pub fn int(c: &BigInt) -> Value {
    match c.to_i64() {
        Some(x) => json!(x),
        None => json!(c.to_string()),
    }
}

pub fn poly(q: &LaurentPoly) -> Value {
    Value::Array(q.terms().map(|(m, c)| json!([int(c), m.exponents()])).collect())
}

pub fn part(u: &CollectedPart) -> Value {
    let mut beta = Map::new();
    for (idx, q) in u.iter() {
        beta.insert(format!("{},{}", idx.i, idx.j), poly(q));
    }
    Value::Object(beta)
}

pub fn element(g: &Element) -> Value {
    json!({ "rank": g.rank(), "gamma": g.gamma(), "beta": part(g.part()) })
}

fn bad(what: &str) -> Error {
    Error::BadCoordinates(format!("malformed JSON: {what}"))
}

fn int_from(v: &Value) -> Result<BigInt, Error> {
    match v {
        Value::Number(n) => n.as_i64().map(BigInt::from).ok_or_else(|| bad("non-integer coefficient")),
        Value::String(s) => s.parse().map_err(|_| bad("coefficient string")),
        _ => Err(bad("coefficient")),
    }
}

pub fn poly_from(v: &Value, rank: usize) -> Result<LaurentPoly, Error> {
    let terms = v.as_array().ok_or_else(|| bad("polynomial must be an array"))?;
    let mut q = LaurentPoly::zero(rank);
    for t in terms {
        let pair = t.as_array().filter(|p| p.len() == 2).ok_or_else(|| bad("term must be [c, [e...]]"))?;
        let exps: Vec<i64> = pair[1]
            .as_array()
            .ok_or_else(|| bad("exponent list"))?
            .iter()
            .map(|e| e.as_i64().ok_or_else(|| bad("exponent")))
            .collect::<Result<_, _>>()?;
        if exps.len() != rank {
            return Err(Error::RankMismatch { left: rank, right: exps.len() });
        }
        q.add_term(Monomial::from_exponents(exps), int_from(&pair[0])?);
    }
    Ok(q)
}

pub fn element_from(v: &Value) -> Result<Element, Error> {
    let rank = v["rank"].as_u64().ok_or_else(|| bad("rank"))? as usize;
    let gamma: Vec<i64> = v["gamma"]
        .as_array()
        .ok_or_else(|| bad("gamma"))?
        .iter()
        .map(|e| e.as_i64().ok_or_else(|| bad("gamma entry")))
        .collect::<Result<_, _>>()?;
    let mut beta = Vec::new();
    if let Some(obj) = v["beta"].as_object() {
        for (key, q) in obj {
            let (i, j) = key.split_once(',').ok_or_else(|| bad("beta key"))?;
            let i = i.trim().parse().map_err(|_| bad("beta key"))?;
            let j = j.trim().parse().map_err(|_| bad("beta key"))?;
            beta.push((CommIndex::new(i, j, rank)?, poly_from(q, rank)?));
        }
    }
    Element::from_parts(gamma, CollectedPart::new(rank, beta)?)
}

pub fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::RankMismatch { .. } => "RankMismatch",
        Error::TrivialBase => "TrivialBase",
        Error::NotDivisible => "NotDivisible",
        Error::DivisionByZero => "DivisionByZero",
        Error::ZeroEvaluationPoint => "ZeroEvaluationPoint",
        Error::BadIndices { .. } => "BadIndices",
        Error::BadIndex { .. } => "BadIndex",
        Error::IndexOutOfRange { .. } => "IndexOutOfRange",
        Error::Syntax { .. } => "Syntax",
        Error::NotInCommutant => "NotInCommutant",
        Error::NotACode => "NotACode",
        Error::BadCoordinates(_) => "BadCoordinates",
        Error::InternalInconsistency(_) => "InternalInconsistency",
        Error::ZeroPolynomial => "ZeroPolynomial",
        Error::NonIntegerExponent => "NonIntegerExponent",
        Error::Overflow => "Overflow",
        Error::TooLarge(_) => "TooLarge",
    }
}

pub fn error(e: &Error) -> Value {
    let mut body = Map::new();
    body.insert("kind".into(), json!(error_kind(e)));
    body.insert("message".into(), json!(e.to_string()));
    match e {
        Error::Syntax { pos, .. } | Error::IndexOutOfRange { pos, .. } => {
            body.insert("pos".into(), json!(pos));
        }
        _ => {}
    }
    doc([("error", Value::Object(body))])
}

#[cfg(test)]
mod tests {
    use super::*;
    use metabelian_core::words::parse_element;

    #[test]
    fn element_schema() {
        let g = parse_element("x2 x1", 2).unwrap();
        assert_eq!(
            element(&g).to_string(),
            r#"{"beta":{"2,1":[[1,[0,0]]]},"gamma":[1,1],"rank":2}"#
        );
        assert_eq!(element_from(&element(&g)).unwrap(), g);
    }

    #[test]
    fn big_coefficients_are_strings() {
        let big = BigInt::from(1u8) << 80u32;
        assert_eq!(int(&big), json!("1208925819614629174706176"));
        let q = LaurentPoly::constant(2, big);
        assert_eq!(poly_from(&poly(&q), 2).unwrap(), q);
    }

    #[test]
    fn error_documents() {
        let e = Error::Syntax { pos: 3, message: "x".into() };
        let v = error(&e);
        assert_eq!(v["v"], 1);
        assert_eq!(v["error"]["kind"], "Syntax");
        assert_eq!(v["error"]["pos"], 3);
    }
}
