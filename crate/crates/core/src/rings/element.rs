use num_bigint::BigInt;
use num_rational::BigRational;

/// Exact payload of a ring element.
///
/// An element does not carry its ring: the enclosing value (a matrix, a
/// presentation, a request) holds the [`Ring`](super::Ring) and every
/// operation is a method on that ring. Payloads are always canonical, so the
/// derived equality is the ring's equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    /// An integer.
    Int(BigInt),
    /// A reduced fraction with positive denominator.
    Rat(BigRational),
    /// A residue in `[0, p)`.
    Residue(u64),
    /// Coefficients ascending in degree, no trailing zeros. The zero
    /// polynomial is the empty sequence.
    Poly(Vec<Element>),
}

impl Element {
    pub fn int(n: impl Into<BigInt>) -> Element {
        Element::Int(n.into())
    }

    pub fn as_int(&self) -> Option<&BigInt> {
        match self {
            Element::Int(n) => Some(n),
            _ => None,
        }
    }

    pub fn as_coefficients(&self) -> Option<&[Element]> {
        match self {
            Element::Poly(c) => Some(c),
            _ => None,
        }
    }

    /// Degree of a polynomial payload; `None` for the zero polynomial and for
    /// non-polynomial payloads.
    pub fn degree(&self) -> Option<usize> {
        match self {
            Element::Poly(c) if !c.is_empty() => Some(c.len() - 1),
            _ => None,
        }
    }
}
