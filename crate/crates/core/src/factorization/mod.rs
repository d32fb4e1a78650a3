//! GCD-monoid algorithms.
//!
//! Bound witnesses certify termination of every refinement loop here: an
//! element bounded by `n` splits into at most `n` nonunit factors, so a loop
//! whose measure is a sum of bounds and which strictly decreases it on every
//! split must stop.

pub(crate) mod polygcd;
mod primary;
mod quasi;
mod separable;

use num_traits::Signed;

pub use primary::{is_primary_int, primary_decompose_int, PrimaryCheck, PrimaryComponent, PrimaryDecomposition};
pub use quasi::{quasi_factorize, CoprimeBasis, CoprimeBasisCheck};
pub use separable::{separable_decompose, SeparableCheck, SeparableDecomposition, SeparablePart, StrongCoprimality};

use crate::error::{AlgebraError, Result};
use crate::rings::{Capability, Element, Ring};

/// A number `n` such that any factorization of `a` into `n + 1` factors
/// contains a unit.
///
/// ℤ: bit length minus one (a product of `k` nonunits is at least `2^k` in
/// absolute value). Fields: 0. k\[X\]: the degree. ℤ\[X\]: degree plus the
/// bit length of the content. None of these is minimal in general.
pub fn bound_witness(ring: &Ring, a: &Element) -> Result<u64> {
    ring.require(Capability::BoundWitness)?;
    if ring.is_zero(a) {
        return Err(AlgebraError::ZeroElement);
    }
    Ok(match (ring, a) {
        (Ring::Integers, Element::Int(n)) => n.abs().bits() - 1,
        (Ring::Rationals | Ring::PrimeField(_), _) => 0,
        (Ring::Poly(base), Element::Poly(c)) => {
            let degree = (c.len() - 1) as u64;
            if base.is_field() {
                degree
            } else {
                let content = polygcd::content(base, c)?;
                degree + bound_witness(base, &content)? + 1
            }
        }
        _ => panic!("element does not belong to {ring}"),
    })
}

/// gcd in a polynomial ring whose coefficients form a field or ℤ.
pub fn poly_gcd(ring: &Ring, f: &Element, g: &Element) -> Result<Element> {
    match ring {
        Ring::Poly(base) if base.has(Capability::Gcd) => ring.gcd(f, g),
        Ring::Poly(_) => Err(AlgebraError::CapabilityMissing {
            ring: ring.to_string(),
            capability: Capability::Gcd,
        }),
        _ => Err(AlgebraError::UnsupportedRing(format!(
            "{ring} is not a polynomial ring"
        ))),
    }
}
