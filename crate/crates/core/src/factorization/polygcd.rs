//! Polynomial gcd over a GCD domain.
//!
//! Over a field this is plain Euclid. Over a non-field GCD domain such as ℤ
//! the gcd splits into a content part and a primitive part (Gauss): the
//! content gcd is taken in the base ring and the primitive gcd through a
//! primitive pseudo-remainder sequence, dividing out the content of each
//! remainder to keep coefficients from growing.

use crate::error::Result;
use crate::rings::{poly, Capability, Element, Ring};

/// Canonical associate of a polynomial: leading coefficient canonical in the
/// base ring (monic over a field, positive over ℤ).
pub(crate) fn normalize(base: &Ring, a: &[Element]) -> Vec<Element> {
    match a.last() {
        None => Vec::new(),
        Some(lead) => {
            let (_, unit) = base.normalize_associate(lead);
            let inv = base.is_unit(&unit).expect("normalizing factor is a unit");
            poly::scale(base, a, &inv)
        }
    }
}

/// gcd of the coefficients, canonical in the base ring.
pub(crate) fn content(base: &Ring, a: &[Element]) -> Result<Element> {
    a.iter().try_fold(base.zero(), |acc, c| base.gcd(&acc, c))
}

/// `a / content(a)`, leading coefficient left with its sign.
pub(crate) fn primitive_part(base: &Ring, a: &[Element]) -> Result<Vec<Element>> {
    let c = content(base, a)?;
    if base.is_zero(&c) {
        return Ok(Vec::new());
    }
    Ok(a.iter()
        .map(|x| base.divides(&c, x).expect("content divides every coefficient"))
        .collect())
}

pub(crate) fn gcd(base: &Ring, a: &[Element], b: &[Element]) -> Result<Vec<Element>> {
    base.require(Capability::Gcd)?;
    if base.is_field() {
        return Ok(gcd_field(base, a, b));
    }
    if a.is_empty() {
        return Ok(normalize(base, b));
    }
    if b.is_empty() {
        return Ok(normalize(base, a));
    }
    let cont = base.gcd(&content(base, a)?, &content(base, b)?)?;
    let (mut r0, mut r1) = (primitive_part(base, a)?, primitive_part(base, b)?);
    if r0.len() < r1.len() {
        std::mem::swap(&mut r0, &mut r1);
    }
    while !r1.is_empty() {
        let r = primitive_part(base, &poly::pseudo_rem(base, &r0, &r1))?;
        r0 = std::mem::replace(&mut r1, r);
    }
    Ok(normalize(base, &poly::scale(base, &r0, &cont)))
}

fn gcd_field(base: &Ring, a: &[Element], b: &[Element]) -> Vec<Element> {
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    while !r1.is_empty() {
        let (_, r) = poly::div_rem(base, &r0, &r1);
        r0 = std::mem::replace(&mut r1, r);
    }
    normalize(base, &r0)
}

/// `(g, s, t)` with `s·a + t·b = g`, `g` monic (or zero when both inputs
/// are zero). The base must be a field.
pub(crate) fn extended_gcd_field(
    base: &Ring,
    a: &[Element],
    b: &[Element],
) -> (Vec<Element>, Vec<Element>, Vec<Element>) {
    debug_assert!(base.is_field());
    let one = poly::constant(base, base.one());
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    let (mut s0, mut s1) = (one.clone(), Vec::new());
    let (mut t0, mut t1) = (Vec::new(), one);
    while !r1.is_empty() {
        let (q, r) = poly::div_rem(base, &r0, &r1);
        r0 = std::mem::replace(&mut r1, r);
        let s = poly::sub(base, &s0, &poly::mul(base, &q, &s1));
        s0 = std::mem::replace(&mut s1, s);
        let t = poly::sub(base, &t0, &poly::mul(base, &q, &t1));
        t0 = std::mem::replace(&mut t1, t);
    }
    match r0.last() {
        None => (Vec::new(), Vec::new(), Vec::new()),
        Some(lead) => {
            let inv = base.is_unit(lead).expect("nonzero field element");
            (
                poly::scale(base, &r0, &inv),
                poly::scale(base, &s0, &inv),
                poly::scale(base, &t0, &inv),
            )
        }
    }
}
