//! Text and JSON renderings of elements and polynomials.
//!
//! Element text: coefficient tuple over the base, low-to-high, slash
//! separated for extension coefficients ("0/1,1/0" is an element of
//! F_{q^2} with q = p^2). JSON: nested coefficient arrays.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::field::{Element, Fe, Field};
use crate::poly::Poly;

pub fn fe_text(fe: &Fe) -> String {
    match fe {
        Fe::P(v) => v.to_string(),
        Fe::X(c) => c.iter().map(fe_text).collect::<Vec<_>>().join("/"),
    }
}

pub fn element_text(a: &Element) -> String {
    match a.fe() {
        Fe::P(v) => v.to_string(),
        Fe::X(c) => c.iter().map(fe_text).collect::<Vec<_>>().join(","),
    }
}

pub fn poly_text(f: &Poly) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    f.coeff_fes()
        .iter()
        .map(fe_text)
        .collect::<Vec<_>>()
        .join(",")
}

pub fn fe_json(fe: &Fe) -> Value {
    match fe {
        Fe::P(v) => json!(v),
        Fe::X(c) => Value::Array(c.iter().map(fe_json).collect()),
    }
}

pub fn element_json(a: &Element) -> Value {
    fe_json(a.fe())
}

pub fn poly_json(f: &Poly) -> Value {
    Value::Array(f.coeff_fes().iter().map(fe_json).collect())
}

/// Field description for record headers.
pub fn field_json(f: &Field) -> Value {
    let mut v = serde_json::Map::new();
    v.insert("p".into(), json!(f.characteristic()));
    v.insert("cardinality".into(), json!(f.cardinality().to_string()));
    v.insert("total_degree".into(), json!(f.total_degree()));
    if let Some(m) = f.modulus() {
        v.insert("modulus".into(), poly_json(&m));
        v.insert("base".into(), field_json(f.base().unwrap()));
    }
    Value::Object(v)
}

/// Parse a base-field coefficient: slash-separated prime digits for
/// extension bases, a single residue for prime bases.
fn parse_coeff(field: &Field, s: &str) -> Result<Fe> {
    if field.is_prime_field() {
        let v: u64 = s
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad coefficient {s:?}")))?;
        return Ok(Fe::P(v % field.characteristic()));
    }
    let parts: Vec<&str> = s.split('/').collect();
    if parts.len() > field.degree() {
        return Err(Error::Parse(format!(
            "coefficient {s:?} has more than {} digits",
            field.degree()
        )));
    }
    let base = field.base().expect("extension has a base");
    let mut digits = Vec::with_capacity(field.degree());
    for part in &parts {
        digits.push(parse_coeff(base, part)?);
    }
    while digits.len() < field.degree() {
        digits.push(base.zero().fe().clone());
    }
    Ok(Fe::X(digits))
}

/// Parse an element of `field` from its comma-separated coefficient tuple.
pub fn parse_element(field: &Field, s: &str) -> Result<Element> {
    if field.is_prime_field() {
        return field.element_from_fes(vec![parse_coeff(field, s)?]);
    }
    let base = field.base().expect("extension has a base");
    let coeffs: Vec<Fe> = s
        .split(',')
        .map(|part| parse_coeff(base, part))
        .collect::<Result<_>>()?;
    field.element_from_fes(coeffs)
}

/// Parse a polynomial over `field` from comma-separated coefficients
/// low-to-high (each coefficient in the element-coefficient grammar).
pub fn parse_poly(field: &Field, s: &str) -> Result<Poly> {
    let coeffs: Vec<Fe> = s
        .split(',')
        .map(|part| parse_coeff(field, part))
        .collect::<Result<_>>()?;
    Ok(Poly::from_fes(field.clone(), coeffs))
}

/// Pack a polynomial's coefficients as hex element indices, low-to-high,
/// dot separated ("1.0.3" for x^2 scaled plus constant over F_4).
pub fn poly_hex(f: &Poly) -> String {
    (0..f.coeff_fes().len())
        .map(|i| format!("{:x}", f.field().index_of(&f.coeff(i)).unwrap()))
        .collect::<Vec<_>>()
        .join(".")
}
