//! Map files: canonical JSON
//! `{"dim_l": n, "dim_v": m, "gram": [...], "ring": "Q"}` with ℚ entries as
//! `"a/b"` strings and ℤ / finite-field entries as integers.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::exactalg::{Matrix, RingKind, RingSpec, Scalar};
use crate::skewmap::SkewBilinearMap;

fn schema(field: impl Into<String>, reason: impl Into<String>) -> Error {
    Error::Schema { field: field.into(), reason: reason.into() }
}

fn count(obj: &Map<String, Value>, key: &str) -> Result<usize> {
    let v = obj.get(key).ok_or_else(|| schema(key, "missing"))?;
    v.as_u64().map(|n| n as usize).ok_or_else(|| schema(key, "expected a non-negative integer"))
}

fn array<'a>(v: &'a Value, field: &str, len: usize) -> Result<&'a Vec<Value>> {
    let a = v.as_array().ok_or_else(|| schema(field, "expected an array"))?;
    if a.len() != len {
        return Err(schema(field, format!("expected {len} entries, found {}", a.len())));
    }
    Ok(a)
}

fn parse_bigint(s: &str, field: &str) -> Result<BigInt> {
    s.trim().parse().map_err(|_| schema(field, format!("{s:?} is not an integer")))
}

fn parse_entry(v: &Value, ring: &RingSpec, field: &str) -> Result<Scalar> {
    match ring.kind() {
        RingKind::Rationals => {
            let (num, den) = match v {
                Value::String(s) => match s.split_once('/') {
                    Some((a, b)) => (parse_bigint(a, field)?, parse_bigint(b, field)?),
                    None => (parse_bigint(s, field)?, BigInt::from(1)),
                },
                Value::Number(n) if n.is_i64() => (BigInt::from(n.as_i64().unwrap()), BigInt::from(1)),
                _ => return Err(schema(field, "expected an \"a/b\" string")),
            };
            if den.is_zero() {
                return Err(schema(field, "zero denominator"));
            }
            Ok(Scalar::Rational(BigRational::new(num, den)))
        }
        RingKind::Integers => match v {
            Value::Number(n) if n.is_i64() => Ok(ring.from_i64(n.as_i64().unwrap())),
            Value::String(s) => Ok(ring.from_bigint(&parse_bigint(s, field)?)),
            _ => Err(schema(field, "expected an integer")),
        },
        RingKind::PrimeField { .. } => match v.as_i64() {
            Some(n) => Ok(ring.from_i64(n)),
            None => Err(schema(field, "expected an integer")),
        },
        RingKind::ExtField { .. } => {
            let q = ring.order().expect("finite");
            match v.as_u64() {
                Some(c) if c < q => Ok(ring.element(c as u32)),
                _ => Err(schema(field, format!("expected an element code in [0, {q})"))),
            }
        }
    }
}

pub fn map_from_json(v: &Value) -> Result<SkewBilinearMap> {
    let obj = v.as_object().ok_or_else(|| schema("$", "expected an object"))?;
    for key in obj.keys() {
        if !["dim_l", "dim_v", "gram", "ring"].contains(&key.as_str()) {
            return Err(schema(key.as_str(), "unexpected key"));
        }
    }
    let ring_text = obj.get("ring").ok_or_else(|| schema("ring", "missing"))?;
    let ring: RingSpec = ring_text
        .as_str()
        .ok_or_else(|| schema("ring", "expected a string"))?
        .parse()
        .map_err(|e: Error| schema("ring", e.to_string()))?;
    let n = count(obj, "dim_l")?;
    let m = count(obj, "dim_v")?;
    let gram = obj.get("gram").ok_or_else(|| schema("gram", "missing"))?;
    let mut mats = Vec::with_capacity(m);
    for (t, g) in array(gram, "gram", m)?.iter().enumerate() {
        let mut rows = Vec::with_capacity(n);
        for (i, row) in array(g, &format!("gram[{t}]"), n)?.iter().enumerate() {
            let row = array(row, &format!("gram[{t}][{i}]"), n)?;
            let entries = row
                .iter()
                .enumerate()
                .map(|(j, e)| parse_entry(e, &ring, &format!("gram[{t}][{i}][{j}]")))
                .collect::<Result<Vec<_>>>()?;
            rows.push(entries);
        }
        mats.push(Matrix::from_rows(&ring, n, rows)?);
    }
    SkewBilinearMap::new(&ring, n, mats)
}

pub fn parse_map(text: &str) -> Result<SkewBilinearMap> {
    let v: Value = serde_json::from_str(text).map_err(|e| schema("$", format!("invalid JSON: {e}")))?;
    map_from_json(&v)
}

/// Entry as it appears in a map file or JSON report.
pub fn entry_json(ring: &RingSpec, a: &Scalar) -> Value {
    match a {
        Scalar::Rational(r) => Value::String(format!("{}/{}", r.numer(), r.denom())),
        Scalar::Integer(z) => match i64::try_from(z) {
            Ok(v) => Value::from(v),
            Err(_) => Value::String(z.to_string()),
        },
        Scalar::Residue(_) => Value::from(ring.code(a)),
    }
}

fn row_text(ring: &RingSpec, row: &[Scalar]) -> String {
    let parts: Vec<String> = row.iter().map(|a| entry_json(ring, a).to_string()).collect();
    format!("[{}]", parts.join(", "))
}

/// Canonical text: sorted keys, one Gram row per line.
pub fn write_map(phi: &SkewBilinearMap) -> String {
    let ring = phi.ring();
    let mut s = String::from("{\n");
    s += &format!("  \"dim_l\": {},\n  \"dim_v\": {},\n", phi.dim_l(), phi.dim_v());
    if phi.dim_v() == 0 {
        s += "  \"gram\": [],\n";
    } else {
        s += "  \"gram\": [\n";
        let mats: Vec<String> = phi
            .gram()
            .iter()
            .map(|g| {
                if g.nrows() == 0 {
                    return "    []".to_string();
                }
                let rows: Vec<String> = (0..g.nrows()).map(|i| format!("      {}", row_text(ring, g.row(i)))).collect();
                format!("    [\n{}\n    ]", rows.join(",\n"))
            })
            .collect();
        s += &mats.join(",\n");
        s += "\n  ],\n";
    }
    s += &format!("  \"ring\": {}\n}}\n", Value::String(ring.to_string()));
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_canonical() {
        let text = "{\n  \"dim_l\": 2,\n  \"dim_v\": 1,\n  \"gram\": [\n    [\n      [\"0/1\", \"1/2\"],\n      [\"-1/2\", \"0/1\"]\n    ]\n  ],\n  \"ring\": \"Q\"\n}\n";
        let phi = parse_map(text).unwrap();
        assert_eq!(write_map(&phi), text);
        let empty = "{\n  \"dim_l\": 0,\n  \"dim_v\": 0,\n  \"gram\": [],\n  \"ring\": \"GF(2)\"\n}\n";
        assert_eq!(write_map(&parse_map(empty).unwrap()), empty);
    }

    #[test]
    fn schema_errors_name_fields() {
        let bad = |t: &str| parse_map(t).unwrap_err();
        assert_eq!(
            bad(r#"{"dim_l": 1, "dim_v": 1, "gram": [[[0]]]}"#),
            Error::Schema { field: "ring".into(), reason: "missing".into() }
        );
        assert!(matches!(bad(r#"{"ring":"Q","dim_l":2,"dim_v":1,"gram":[[["0/1"]]]}"#), Error::Schema { field, .. } if field == "gram[0]"));
        assert!(matches!(bad(r#"{"ring":"Q","dim_l":1,"dim_v":1,"gram":[[["x"]]]}"#), Error::Schema { field, .. } if field == "gram[0][0][0]"));
        assert!(matches!(bad(r#"{"ring":"Q","dim_l":1,"dim_v":1,"gram":[[["1/0"]]]}"#), Error::Schema { .. }));
        assert!(matches!(bad(r#"{"ring":"Q","dim_l":0,"dim_v":0,"gram":[],"extra":1}"#), Error::Schema { field, .. } if field == "extra"));
        assert_eq!(bad(r#"{"ring":"Q","dim_l":1,"dim_v":1,"gram":[[["1/1"]]]}"#), Error::NonzeroDiagonal { t: 0, i: 0 });
        assert!(matches!(bad("{"), Error::Schema { .. }));
    }
}
