use num::bigint::BigInt;
use num::ToPrimitive;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::{FracSeries, SeriesError};
use crate::rat::Rat;

/// Wire shape of a one-variable series.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub qden: u64,
    pub cutoff: [Value; 2],
    pub terms: Vec<[Value; 4]>,
}

fn big(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) => json!(v),
        None => json!(n.to_string()),
    }
}

fn parse_big(v: &Value) -> Result<BigInt, SeriesError> {
    match v {
        Value::Number(n) => n.as_i64().map(BigInt::from).ok_or_else(|| SeriesError::Json(format!("bad integer {n}"))),
        Value::String(s) => s.parse().map_err(|_| SeriesError::Json(format!("bad integer {s}"))),
        other => Err(SeriesError::Json(format!("expected integer, got {other}"))),
    }
}

fn parse_rat(n: &Value, d: &Value) -> Result<Rat, SeriesError> {
    let d = parse_big(d)?;
    if d == BigInt::from(0) {
        return Err(SeriesError::Json("zero denominator".into()));
    }
    Ok(Rat::new(parse_big(n)?, d))
}

pub fn series_to_json(s: &FracSeries) -> Value {
    let terms: Vec<Value> =
        s.terms().map(|(e, c)| json!([big(e.numer()), big(e.denom()), big(c.numer()), big(c.denom())])).collect();
    json!({
        "qden": s.qden(),
        "cutoff": [big(s.cutoff().numer()), big(s.cutoff().denom())],
        "terms": terms,
    })
}

pub fn series_from_json(v: &Value) -> Result<FracSeries, SeriesError> {
    let raw: SeriesJson = serde_json::from_value(v.clone()).map_err(|e| SeriesError::Json(e.to_string()))?;
    let cutoff = parse_rat(&raw.cutoff[0], &raw.cutoff[1])?;
    let mut terms = Vec::with_capacity(raw.terms.len());
    for t in &raw.terms {
        terms.push((parse_rat(&t[0], &t[1])?, parse_rat(&t[2], &t[3])?));
    }
    let s = FracSeries::from_terms(terms, cutoff);
    if s.qden() != raw.qden && !s.is_zero() {
        return Err(SeriesError::Json(format!("qden {} does not match exponents (expected {})", raw.qden, s.qden())));
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{int, rat};

    #[test]
    fn round_trip() {
        let s = FracSeries::from_terms([(rat(1, 8), int(3)), (rat(9, 8), rat(-1, 2))], int(2));
        let v = series_to_json(&s);
        assert_eq!(v["qden"], json!(8));
        assert_eq!(v["terms"][0], json!([1, 8, 3, 1]));
        assert_eq!(series_from_json(&v).unwrap(), s);
    }
}
