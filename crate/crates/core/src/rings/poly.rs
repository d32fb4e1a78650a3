//! Dense univariate polynomial arithmetic over a coefficient ring.
//!
//! Polynomials are coefficient slices ascending in degree with no trailing
//! zeros. Every function takes the coefficient ring explicitly.

use super::{Element, Ring};

pub(crate) fn trim(base: &Ring, mut v: Vec<Element>) -> Vec<Element> {
    while v.last().is_some_and(|c| base.is_zero(c)) {
        v.pop();
    }
    v
}

pub(crate) fn leading(a: &[Element]) -> Option<&Element> {
    a.last()
}

pub(crate) fn constant(base: &Ring, c: Element) -> Vec<Element> {
    trim(base, vec![c])
}

pub(crate) fn add(base: &Ring, a: &[Element], b: &[Element]) -> Vec<Element> {
    let n = a.len().max(b.len());
    let zero = base.zero();
    let out = (0..n)
        .map(|i| base.add(a.get(i).unwrap_or(&zero), b.get(i).unwrap_or(&zero)))
        .collect();
    trim(base, out)
}

pub(crate) fn neg(base: &Ring, a: &[Element]) -> Vec<Element> {
    a.iter().map(|c| base.neg(c)).collect()
}

pub(crate) fn sub(base: &Ring, a: &[Element], b: &[Element]) -> Vec<Element> {
    add(base, a, &neg(base, b))
}

pub(crate) fn mul(base: &Ring, a: &[Element], b: &[Element]) -> Vec<Element> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![base.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if base.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = base.add(&out[i + j], &base.mul(x, y));
        }
    }
    trim(base, out)
}

pub(crate) fn scale(base: &Ring, a: &[Element], c: &Element) -> Vec<Element> {
    trim(base, a.iter().map(|x| base.mul(x, c)).collect())
}

/// `c·X^k·a`
fn shifted(base: &Ring, a: &[Element], c: &Element, k: usize) -> Vec<Element> {
    let mut out = vec![base.zero(); k];
    out.extend(a.iter().map(|x| base.mul(x, c)));
    trim(base, out)
}

pub(crate) fn derivative(base: &Ring, a: &[Element]) -> Vec<Element> {
    let out = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| base.mul(&base.from_u64(i as u64), c))
        .collect();
    trim(base, out)
}

/// Exact quotient `q` with `a·q = b`, by long division whose every step
/// requires the leading coefficient of `a` to divide the current leading
/// coefficient. Over an integral domain the quotient, when it exists, is
/// unique, so failure at any step means `a` does not divide `b`.
pub(crate) fn div_exact(base: &Ring, b: &[Element], a: &[Element]) -> Option<Vec<Element>> {
    let lead = leading(a)?;
    if b.is_empty() {
        return Some(Vec::new());
    }
    if b.len() < a.len() {
        return None;
    }
    let mut rem = b.to_vec();
    let mut quot = vec![base.zero(); b.len() - a.len() + 1];
    while rem.len() >= a.len() {
        let shift = rem.len() - a.len();
        let c = base.divides(lead, leading(&rem)?)?;
        let step = shifted(base, a, &c, shift);
        rem = sub(base, &rem, &step);
        quot[shift] = c;
        if rem.is_empty() {
            return Some(trim(base, quot));
        }
    }
    None
}

/// Division with remainder over a field.
pub(crate) fn div_rem(base: &Ring, a: &[Element], b: &[Element]) -> (Vec<Element>, Vec<Element>) {
    let lead_inv = base
        .is_unit(leading(b).expect("division by the zero polynomial"))
        .expect("leading coefficient must be invertible");
    let mut rem = a.to_vec();
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![base.zero(); rem.len() - b.len() + 1];
    while !rem.is_empty() && rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let c = base.mul(leading(&rem).unwrap(), &lead_inv);
        rem = sub(base, &rem, &shifted(base, b, &c, shift));
        quot[shift] = c;
    }
    (trim(base, quot), rem)
}

/// A pseudo-remainder of `a` by `b`: `lc(b)^k·a mod b` for some `k ≥ 0`.
pub(crate) fn pseudo_rem(base: &Ring, a: &[Element], b: &[Element]) -> Vec<Element> {
    let lead = leading(b).expect("pseudo-division by the zero polynomial").clone();
    let mut rem = a.to_vec();
    while !rem.is_empty() && rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let top = leading(&rem).unwrap().clone();
        rem = sub(base, &scale(base, &rem, &lead), &shifted(base, b, &top, shift));
    }
    rem
}

/// `f(X^q)`
pub(crate) fn inflate(base: &Ring, f: &[Element], q: usize) -> Vec<Element> {
    if f.is_empty() {
        return Vec::new();
    }
    let mut out = vec![base.zero(); (f.len() - 1) * q + 1];
    for (i, c) in f.iter().enumerate() {
        out[i * q] = c.clone();
    }
    out
}

/// The `h` with `f = h(X^p)`, if every nonzero coefficient of `f` sits at a
/// degree divisible by `p`.
pub(crate) fn deflate(base: &Ring, f: &[Element], p: usize) -> Option<Vec<Element>> {
    if f.iter().enumerate().any(|(i, c)| i % p != 0 && !base.is_zero(c)) {
        return None;
    }
    Some(f.iter().step_by(p).cloned().collect())
}
