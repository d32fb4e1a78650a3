//! Primary decomposition of ideals of ℤ.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{AlgebraError, Result};

/// Largest accepted `|n|`; trial division stays instant below it.
const DESK_LIMIT: u64 = 1 << 48;

/// `(q) = (p^e)` together with its radical `(p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimaryComponent {
    pub primary: BigInt,
    pub radical: BigInt,
}

/// `(n) = ⋂ (q_i)`, components ordered by increasing radical.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PrimaryDecomposition {
    pub components: Vec<PrimaryComponent>,
}

fn desk_scale(n: &BigInt) -> Result<u64> {
    n.abs()
        .to_u64()
        .filter(|&m| m < DESK_LIMIT)
        .ok_or_else(|| AlgebraError::Precondition(format!("|{n}| must be below 2^48")))
}

/// Prime factorization of `m ≥ 1` by trial division.
fn factor(mut m: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            let mut e = 0;
            while m.is_multiple_of(d) {
                m /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

/// Primary decomposition of `(n)`.
///
/// `(0)` is prime and decomposes as itself; `(±1)` is the whole ring and
/// has the empty decomposition.
pub fn primary_decompose_int(n: &BigInt) -> Result<PrimaryDecomposition> {
    let m = desk_scale(n)?;
    if m == 0 {
        return Ok(PrimaryDecomposition {
            components: vec![PrimaryComponent {
                primary: BigInt::zero(),
                radical: BigInt::zero(),
            }],
        });
    }
    let components = factor(m)
        .into_iter()
        .map(|(p, e)| PrimaryComponent {
            primary: BigInt::from(p).pow(e),
            radical: BigInt::from(p),
        })
        .collect();
    Ok(PrimaryDecomposition { components })
}

/// The radical generator `p` when `(n)` is primary: `n = 0` or `|n| = p^e`
/// with `p` prime and `e ≥ 1`.
pub fn is_primary_int(n: &BigInt) -> Result<Option<BigInt>> {
    let m = desk_scale(n)?;
    if m == 0 {
        return Ok(Some(BigInt::zero()));
    }
    Ok(match factor(m).as_slice() {
        [(p, _)] => Some(BigInt::from(*p)),
        _ => None,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimaryCheck {
    /// The product of the primary generators is `|n|`.
    pub product: bool,
    /// Each component is primary with the stored radical.
    pub primary_components: bool,
    pub distinct_radicals: bool,
    /// `(∏ p)` is the radical of `(n)`: `∏ p` divides `n` and `n` divides a
    /// power of it.
    pub radical: bool,
}

impl PrimaryCheck {
    pub fn all(&self) -> bool {
        self.product && self.primary_components && self.distinct_radicals && self.radical
    }
}

impl PrimaryDecomposition {
    pub fn check(&self, n: &BigInt) -> Result<PrimaryCheck> {
        let n = n.abs();
        let product = if n.is_zero() {
            self.components.len() == 1 && self.components[0].primary.is_zero()
        } else {
            self.components.iter().fold(BigInt::one(), |acc, c| acc * &c.primary) == n
        };
        let mut primary_components = true;
        for c in &self.components {
            primary_components &= is_primary_int(&c.primary)?.as_ref() == Some(&c.radical);
        }
        let mut radicals: Vec<&BigInt> = self.components.iter().map(|c| &c.radical).collect();
        radicals.sort();
        radicals.dedup();
        let distinct_radicals = radicals.len() == self.components.len();
        let rad = self.components.iter().fold(BigInt::one(), |acc, c| acc * &c.radical);
        let radical = if n.is_zero() {
            rad.is_zero()
        } else {
            let top = self.components.iter().map(|c| c.primary.bits()).max().unwrap_or(0);
            n.is_multiple_of(&rad) && rad.pow(top as u32).is_multiple_of(&n)
        };
        Ok(PrimaryCheck {
            product,
            primary_components,
            distinct_radicals,
            radical,
        })
    }
}
