//! JSON rendering of results and decoding of the roots and family files.
//!
//! `serde_json` maps are ordered, so every object prints with sorted keys.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use polar_core::kuolu::{ContactMatrix, ContactTree, PuiseuxTruncation};
use polar_core::multibranch::{Branch, BranchFamily};
use polar_core::{Extended, JacobianPolygon, NewtonDiagram, Rational};
use serde_json::{json, Map, Value};

pub fn integer(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) => Value::from(v),
        // Out-of-range integers keep their exact decimal form.
        None => Value::String(n.to_string()),
    }
}

/// `[numerator, denominator]` in lowest terms, denominator positive.
pub fn rational(q: &Rational) -> Value {
    json!([integer(q.numer()), integer(q.denom())])
}

pub fn extended<T>(v: &Extended<T>, f: impl Fn(&T) -> Value) -> Value {
    match v {
        Extended::Finite(x) => f(x),
        Extended::Infinity => Value::String("inf".into()),
    }
}

pub fn diagram(d: &NewtonDiagram) -> Value {
    json!({ "vertices": d.vertices().iter().map(|&(a, b)| json!([a, b])).collect::<Vec<_>>() })
}

pub fn polygon(p: &JacobianPolygon) -> Value {
    let faces: Vec<Value> = p.entries().iter().map(|e| json!({ "q": rational(&e.q), "m": e.multiplicity })).collect();
    let mut out = Map::new();
    out.insert("faces".into(), Value::Array(faces));
    out.insert("vertices".into(), diagram(p.polygon())["vertices"].clone());
    Value::Object(out)
}

pub fn tree(t: &ContactTree, q: &[Option<Rational>]) -> Value {
    let balls: Vec<Value> = t
        .balls()
        .iter()
        .zip(q)
        .map(|(b, q)| {
            json!({
                "members": b.members,
                "height": extended(&b.height, rational),
                "successors": b.successors,
                "q": q.as_ref().map_or(Value::Null, rational),
            })
        })
        .collect();
    Value::Array(balls)
}

/// Why an input file does not match its schema.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchemaError(pub String);

impl std::fmt::Display for SchemaError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

type Decoded<T> = Result<T, SchemaError>;

fn fail<T>(msg: impl Into<String>) -> Decoded<T> {
    Err(SchemaError(msg.into()))
}

fn field<'a>(v: &'a Value, key: &str, at: &str) -> Decoded<&'a Value> {
    v.get(key).ok_or_else(|| SchemaError(format!("{at}: missing \"{key}\"")))
}

fn array<'a>(v: &'a Value, at: &str) -> Decoded<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| SchemaError(format!("{at}: expected an array")))
}

fn big(v: &Value, at: &str) -> Decoded<BigInt> {
    match v {
        Value::Number(n) if n.is_i64() => Ok(n.as_i64().unwrap().into()),
        Value::Number(n) if n.is_u64() => Ok(n.as_u64().unwrap().into()),
        Value::String(s) => s.parse().map_err(|_| SchemaError(format!("{at}: {s:?} is not an integer"))),
        _ => fail(format!("{at}: expected an integer")),
    }
}

fn unsigned(v: &Value, at: &str) -> Decoded<u64> {
    v.as_u64().ok_or_else(|| SchemaError(format!("{at}: expected a nonnegative integer")))
}

/// An integer or a `[numerator, denominator]` pair.
pub fn decode_rational(v: &Value, at: &str) -> Decoded<Rational> {
    if let Some(pair) = v.as_array() {
        if pair.len() != 2 {
            return fail(format!("{at}: a rational is [numerator, denominator]"));
        }
        let (n, d) = (big(&pair[0], at)?, big(&pair[1], at)?);
        if d.is_zero() {
            return fail(format!("{at}: zero denominator"));
        }
        return Ok(Rational::new(n, d));
    }
    Ok(Rational::from_integer(big(v, at)?))
}

pub fn decode_extended(v: &Value, at: &str) -> Decoded<Extended<Rational>> {
    if v.as_str() == Some("inf") {
        return Ok(Extended::Infinity);
    }
    decode_rational(v, at).map(Extended::Finite)
}

/// Input of the `tree` subcommand.
pub enum TreeInput {
    Roots(Vec<PuiseuxTruncation>),
    Contacts(ContactMatrix),
}

/// `polar_core` rejections reached while decoding are reported separately
/// from schema mismatches.
pub enum DecodeError {
    Schema(SchemaError),
    Rejected(polar_core::Error),
}

impl From<SchemaError> for DecodeError {
    fn from(e: SchemaError) -> Self {
        DecodeError::Schema(e)
    }
}

impl From<polar_core::Error> for DecodeError {
    fn from(e: polar_core::Error) -> Self {
        DecodeError::Rejected(e)
    }
}

pub fn decode_tree(v: &Value) -> Result<TreeInput, DecodeError> {
    if let Some(roots) = v.get("roots") {
        let mut out = Vec::new();
        for (i, root) in array(roots, "roots")?.iter().enumerate() {
            let at = format!("roots[{i}]");
            let p = unsigned(field(root, "p", &at)?, &format!("{at}.p"))?;
            let mut terms = Vec::new();
            for (k, t) in array(field(root, "terms", &at)?, &at)?.iter().enumerate() {
                let tat = format!("{at}.terms[{k}]");
                match t.as_array().map(Vec::as_slice) {
                    Some([e, c]) => terms.push((decode_rational(e, &tat)?, decode_rational(c, &tat)?)),
                    _ => return Err(SchemaError(format!("{tat}: a term is [exponent, coefficient]")).into()),
                }
            }
            let trunc = match root.get("trunc") {
                None => Extended::Infinity,
                Some(t) => decode_extended(t, &format!("{at}.trunc"))?,
            };
            out.push(PuiseuxTruncation::new(p, terms, trunc)?);
        }
        return Ok(TreeInput::Roots(out));
    }
    if let Some(rows) = v.get("contacts") {
        let mut m = Vec::new();
        for (i, row) in array(rows, "contacts")?.iter().enumerate() {
            let cells = array(row, &format!("contacts[{i}]"))?;
            let decoded: Decoded<Vec<_>> = cells
                .iter()
                .enumerate()
                .map(|(j, c)| decode_extended(c, &format!("contacts[{i}][{j}]")))
                .collect();
            m.push(decoded?);
        }
        return Ok(TreeInput::Contacts(ContactMatrix::new(m)?));
    }
    Err(SchemaError("expected \"roots\" or \"contacts\"".into()).into())
}

pub fn decode_family(v: &Value) -> Result<BranchFamily, DecodeError> {
    let mut branches = Vec::new();
    for (i, b) in array(field(v, "branches", "family")?, "branches")?.iter().enumerate() {
        let at = format!("branches[{i}]");
        let d = unsigned(field(b, "d", &at)?, &format!("{at}.d"))?;
        let zseq: Decoded<Vec<u64>> = array(field(b, "zseq", &at)?, &at)?
            .iter()
            .map(|g| unsigned(g, &format!("{at}.zseq")))
            .collect();
        branches.push(Branch::new(d, zseq?)?);
    }
    let mut m = Vec::new();
    for (i, row) in array(field(v, "intersections", "family")?, "intersections")?.iter().enumerate() {
        let mut out = Vec::new();
        for (j, c) in array(row, &format!("intersections[{i}]"))?.iter().enumerate() {
            out.push(if c.as_str() == Some("inf") {
                Extended::Infinity
            } else {
                Extended::Finite(unsigned(c, &format!("intersections[{i}][{j}]"))?)
            });
        }
        m.push(out);
    }
    Ok(BranchFamily::new(branches, m)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn rationals() {
        assert_eq!(rational(&r(-6, 4)).to_string(), "[-3,2]");
        assert_eq!(decode_rational(&json!([6, -4]), "x").unwrap(), r(-3, 2));
        assert_eq!(decode_rational(&json!(7), "x").unwrap(), r(7, 1));
        assert!(decode_rational(&json!([1, 0]), "x").is_err());
        let huge: BigInt = "123456789012345678901234567890".parse().unwrap();
        assert_eq!(integer(&huge), Value::String(huge.to_string()));
    }

    #[test]
    fn sorted_keys() {
        let p = JacobianPolygon::from_diagram(NewtonDiagram::new(vec![(0, 3), (6, 2), (19, 0)]).unwrap()).unwrap();
        assert_eq!(
            polygon(&p).to_string(),
            r#"{"faces":[{"m":1,"q":[6,1]},{"m":2,"q":[13,2]}],"vertices":[[0,3],[6,2],[19,0]]}"#
        );
    }

    #[test]
    fn family_schema() {
        let v = json!({"branches": [{"d": 1, "zseq": [1]}, {"d": 2, "zseq": [2, 3]}], "intersections": [["inf", 3], [3, "inf"]]});
        let fam = decode_family(&v).ok().unwrap();
        assert_eq!(fam.intersection(0, 1), 3);
        let bad = json!({"branches": [{"d": 1, "zseq": [1]}, {"d": 1, "zseq": [1]}], "intersections": [["inf", "inf"], ["inf", "inf"]]});
        assert!(matches!(decode_family(&bad), Err(DecodeError::Rejected(_))));
        assert!(matches!(decode_family(&json!({"branches": 3})), Err(DecodeError::Schema(_))));
    }
}
