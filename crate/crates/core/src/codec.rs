//! Text encoding of rings, elements, matrices and presentations.
//!
//! * ring tags: `ZZ`, `QQ`, `Fp:<p>`, `poly:<base-tag>` (one level);
//! * integers: optionally signed decimal strings;
//! * rationals: `"num/den"` with `den > 0`, or a bare integer;
//! * 𝔽_p residues: decimal strings in `[0, p)`;
//! * polynomials: arrays of coefficient encodings, ascending in degree;
//! * matrices: `{"ring": tag, "rows": [[...], ...]}`, plus `"cols"` when
//!   there are no rows to read the width from;
//! * presentations: `{"ring": tag, "generators": n, "relations": matrix}`.
//!
//! Numbers are always strings so arbitrary precision survives any JSON
//! reader. Parsing canonicalizes: fractions are reduced and trailing zero
//! coefficients dropped.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde_json::{json, Map, Value};

use crate::error::{AlgebraError, Result};
use crate::fpmodules::Presentation;
use crate::linalg::Matrix;
use crate::rings::{poly, Element, Ring};

fn parse_err(msg: impl Into<String>) -> AlgebraError {
    AlgebraError::Parse(msg.into())
}

pub fn parse_ring(tag: &str) -> Result<Ring> {
    if let Some(base) = tag.strip_prefix("poly:") {
        let base = parse_ring(base)?;
        return Ring::poly(base).map_err(|e| parse_err(format!("ring tag {tag:?}: {e}")));
    }
    match tag {
        "ZZ" => Ok(Ring::Integers),
        "QQ" => Ok(Ring::Rationals),
        _ => {
            let p = tag
                .strip_prefix("Fp:")
                .filter(|d| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()))
                .and_then(|d| d.parse::<u64>().ok())
                .ok_or_else(|| parse_err(format!("unknown ring tag {tag:?}")))?;
            Ring::prime_field(p).map_err(|e| parse_err(format!("ring tag {tag:?}: {e}")))
        }
    }
}

fn is_decimal(s: &str, allow_sign: bool) -> bool {
    let digits = if allow_sign {
        s.strip_prefix(['-', '+']).unwrap_or(s)
    } else {
        s
    };
    !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
}

pub fn parse_integer(value: &Value) -> Result<BigInt> {
    let s = value
        .as_str()
        .ok_or_else(|| parse_err(format!("expected a decimal string, found {value}")))?;
    if !is_decimal(s, true) {
        return Err(parse_err(format!("{s:?} is not a decimal integer")));
    }
    Ok(BigInt::from_str(s.strip_prefix('+').unwrap_or(s)).expect("validated decimal"))
}

pub fn encode_integer(n: &BigInt) -> Value {
    Value::String(n.to_string())
}

pub fn parse_element(ring: &Ring, value: &Value) -> Result<Element> {
    match ring {
        Ring::Integers => parse_integer(value).map(Element::Int),
        Ring::Rationals => {
            let s = value
                .as_str()
                .ok_or_else(|| parse_err(format!("expected a rational string, found {value}")))?;
            let (num, den) = s.split_once('/').unwrap_or((s, "1"));
            if !is_decimal(num, true) || !is_decimal(den, false) {
                return Err(parse_err(format!("{s:?} is not a rational num/den")));
            }
            let num = BigInt::from_str(num.strip_prefix('+').unwrap_or(num)).expect("validated decimal");
            let den = BigInt::from_str(den).expect("validated decimal");
            if den.is_zero() {
                return Err(parse_err(format!("{s:?} has a zero denominator")));
            }
            Ok(Element::Rat(BigRational::new(num, den)))
        }
        Ring::PrimeField(p) => {
            let s = value
                .as_str()
                .ok_or_else(|| parse_err(format!("expected a residue string, found {value}")))?;
            let r = is_decimal(s, false)
                .then(|| s.parse::<u64>().ok())
                .flatten()
                .filter(|&r| r < p.get())
                .ok_or_else(|| parse_err(format!("{s:?} is not a residue in [0, {})", p.get())))?;
            Ok(Element::Residue(r))
        }
        Ring::Poly(base) => {
            let coeffs = value
                .as_array()
                .ok_or_else(|| parse_err(format!("expected a coefficient array, found {value}")))?
                .iter()
                .map(|c| parse_element(base, c))
                .collect::<Result<Vec<_>>>()?;
            Ok(Element::Poly(poly::trim(base, coeffs)))
        }
    }
}

pub fn encode_element(ring: &Ring, a: &Element) -> Value {
    match (ring, a) {
        (Ring::Integers, Element::Int(n)) => encode_integer(n),
        (Ring::Rationals, Element::Rat(q)) => Value::String(q.to_string()),
        (Ring::PrimeField(_), Element::Residue(r)) => Value::String(r.to_string()),
        (Ring::Poly(base), Element::Poly(c)) => Value::Array(c.iter().map(|x| encode_element(base, x)).collect()),
        _ => panic!("element does not belong to {ring}"),
    }
}

pub fn parse_elements(ring: &Ring, value: &Value) -> Result<Vec<Element>> {
    value
        .as_array()
        .ok_or_else(|| parse_err(format!("expected an array of elements, found {value}")))?
        .iter()
        .map(|v| parse_element(ring, v))
        .collect()
}

pub fn encode_elements(ring: &Ring, xs: &[Element]) -> Value {
    Value::Array(xs.iter().map(|x| encode_element(ring, x)).collect())
}

pub fn object(value: &Value) -> Result<&Map<String, Value>> {
    value
        .as_object()
        .ok_or_else(|| parse_err(format!("expected an object, found {value}")))
}

pub fn field<'a>(obj: &'a Map<String, Value>, key: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| parse_err(format!("missing field {key:?}")))
}

pub fn ring_field(obj: &Map<String, Value>) -> Result<Ring> {
    let tag = field(obj, "ring")?
        .as_str()
        .ok_or_else(|| parse_err("ring tag must be a string"))?;
    parse_ring(tag)
}

pub fn count_field(obj: &Map<String, Value>, key: &str) -> Result<usize> {
    field(obj, key)?
        .as_u64()
        .and_then(|n| usize::try_from(n).ok())
        .ok_or_else(|| parse_err(format!("{key:?} must be a nonnegative integer")))
}

/// Rows of a matrix in a given ring, with an optional explicit width.
pub fn parse_rows(ring: &Ring, rows: &Value, cols: Option<usize>) -> Result<Matrix> {
    let rows: Vec<Vec<Element>> = rows
        .as_array()
        .ok_or_else(|| parse_err("\"rows\" must be an array of arrays"))?
        .iter()
        .map(|r| parse_elements(ring, r))
        .collect::<Result<_>>()?;
    let width = rows.first().map_or(cols.unwrap_or(0), Vec::len);
    if cols.is_some_and(|c| c != width) || rows.iter().any(|r| r.len() != width) {
        return Err(parse_err("rows have inconsistent lengths"));
    }
    let n = rows.len();
    Matrix::new(ring.clone(), n, width, rows.into_iter().flatten().collect())
}

pub fn parse_matrix(value: &Value) -> Result<Matrix> {
    let obj = object(value)?;
    let ring = ring_field(obj)?;
    let cols = obj.get("cols").map(|_| count_field(obj, "cols")).transpose()?;
    parse_rows(&ring, field(obj, "rows")?, cols)
}

pub fn encode_rows(m: &Matrix) -> Value {
    Value::Array((0..m.rows()).map(|i| encode_elements(m.ring(), m.row(i))).collect())
}

pub fn encode_matrix(m: &Matrix) -> Value {
    let mut obj = Map::new();
    obj.insert("ring".into(), Value::String(m.ring().to_string()));
    obj.insert("rows".into(), encode_rows(m));
    if m.rows() == 0 {
        obj.insert("cols".into(), json!(m.cols()));
    }
    Value::Object(obj)
}

pub fn parse_presentation(value: &Value) -> Result<Presentation> {
    let obj = object(value)?;
    let ring = ring_field(obj)?;
    let generators = count_field(obj, "generators")?;
    let relations = match obj.get("relations") {
        None => Matrix::zeros(ring.clone(), generators, 0),
        Some(rel) => parse_matrix(rel)?,
    };
    if *relations.ring() != ring {
        return Err(parse_err(format!(
            "relations over {} in a presentation over {ring}",
            relations.ring()
        )));
    }
    Presentation::new(generators, relations).map_err(|e| parse_err(e.to_string()))
}

pub fn encode_presentation(p: &Presentation) -> Value {
    json!({
        "ring": p.ring().to_string(),
        "generators": p.generators(),
        "relations": encode_matrix(p.relations()),
    })
}

/// Nonnegative integer encoded as a string, e.g. an exponent or a count
/// that may exceed 2⁵³.
pub fn encode_count(n: u64) -> Value {
    Value::String(n.to_string())
}
