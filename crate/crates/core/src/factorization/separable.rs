use crate::error::{AlgebraError, Result};
use crate::rings::{poly, Element, Ring};

use super::polygcd;
use super::quasi::{refine, valuation};

/// One member of a separable decomposition: the polynomial `core(X^q)` with
/// `core` monic and separable, and `q` either 1 or a power of the
/// characteristic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparablePart {
    pub core: Element,
    pub q: u64,
    pub stored: Element,
}

/// `u·parts[first].stored + v·parts[second].stored = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrongCoprimality {
    pub first: usize,
    pub second: usize,
    pub u: Element,
    pub v: Element,
}

/// Input `i` equals `∏_j parts[j].stored ^ exponents[i][j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparableDecomposition {
    pub parts: Vec<SeparablePart>,
    pub exponents: Vec<Vec<u64>>,
    pub witnesses: Vec<StrongCoprimality>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SeparableCheck {
    /// Every core is monic with `gcd(f, f') = 1` and `stored = core(X^q)`.
    pub separable_parts: bool,
    /// `q = 1` or a power of the characteristic (always 1 in characteristic 0).
    pub q_powers: bool,
    /// One stored witness per pair of parts, each summing to 1.
    pub strongly_coprime: bool,
    pub reconstruction: bool,
}

impl SeparableCheck {
    pub fn all(&self) -> bool {
        self.separable_parts && self.q_powers && self.strongly_coprime && self.reconstruction
    }
}

impl SeparableDecomposition {
    /// Re-verifies every clause from the stored data alone; the witnesses are
    /// checked, never recomputed.
    pub fn check(&self, ring: &Ring, inputs: &[Element]) -> Result<SeparableCheck> {
        let base = field_base(ring)?;
        let char_p = ring.characteristic();
        let separable_parts = self.parts.iter().all(|part| {
            let Element::Poly(f) = &part.core else { return false };
            let monic = f.last().is_some_and(|c| base.is_one(c)) && f.len() > 1;
            let derivative = Element::Poly(poly::derivative(base, f));
            let separable = ring.gcd(&part.core, &derivative).is_ok_and(|g| ring.is_one(&g));
            let stored = Element::Poly(poly::inflate(base, f, part.q as usize)) == part.stored;
            monic && separable && stored
        });
        let q_powers = self.parts.iter().all(|part| is_power_of(part.q, char_p));
        let n = self.parts.len();
        let mut pairs_seen = vec![vec![false; n]; n];
        let mut strongly_coprime = self.witnesses.len() == n * n.saturating_sub(1) / 2;
        for w in &self.witnesses {
            if w.first >= w.second || w.second >= n || pairs_seen[w.first][w.second] {
                strongly_coprime = false;
                continue;
            }
            pairs_seen[w.first][w.second] = true;
            let sum = ring.add(
                &ring.mul(&w.u, &self.parts[w.first].stored),
                &ring.mul(&w.v, &self.parts[w.second].stored),
            );
            strongly_coprime &= ring.is_one(&sum);
        }
        let reconstruction = self.exponents.len() == inputs.len()
            && inputs.iter().zip(&self.exponents).all(|(s, row)| {
                row.len() == n && {
                    let powers: Vec<Element> = self
                        .parts
                        .iter()
                        .zip(row)
                        .map(|(p, &e)| ring.pow(&p.stored, e))
                        .collect();
                    ring.product(&powers) == *s
                }
            });
        Ok(SeparableCheck {
            separable_parts,
            q_powers,
            strongly_coprime,
            reconstruction,
        })
    }
}

fn is_power_of(q: u64, p: u64) -> bool {
    if q == 1 {
        return true;
    }
    if p < 2 {
        return false;
    }
    let mut q = q;
    while q.is_multiple_of(p) {
        q /= p;
    }
    q == 1
}

fn field_base(ring: &Ring) -> Result<&Ring> {
    match ring.base() {
        Some(base) if base.is_field() => Ok(base),
        _ => Err(AlgebraError::UnsupportedRing(format!(
            "{ring}: separable decomposition needs polynomials over QQ or Fp"
        ))),
    }
}

/// Pairs `(f, m)` with `f` monic separable, pairwise coprime, and
/// `a = ∏ f^m`. In characteristic `p` a factor with vanishing derivative is
/// `h(X^p)`; since the Frobenius fixes 𝔽_p, `h(X^p) = h^p`, so it is peeled
/// by deflating exponents and recursing with multiplicities scaled by `p`.
fn separable_powers(base: &Ring, a: &[Element]) -> Result<Vec<(Vec<Element>, u64)>> {
    if a.len() <= 1 {
        return Ok(Vec::new());
    }
    let p = base.characteristic();
    let derivative = poly::derivative(base, a);
    if derivative.is_empty() {
        return peel(base, a, p);
    }
    let mut c = polygcd::gcd(base, a, &derivative)?;
    let mut w = poly::div_exact(base, a, &c).expect("gcd divides");
    let mut out = Vec::new();
    let mut multiplicity = 1;
    while w.len() > 1 {
        let y = polygcd::gcd(base, &w, &c)?;
        let z = poly::div_exact(base, &w, &y).expect("gcd divides");
        if z.len() > 1 {
            out.push((z, multiplicity));
        }
        c = poly::div_exact(base, &c, &y).expect("gcd divides");
        w = y;
        multiplicity += 1;
    }
    if c.len() > 1 {
        out.extend(peel(base, &c, p)?);
    }
    Ok(out)
}

fn peel(base: &Ring, a: &[Element], p: u64) -> Result<Vec<(Vec<Element>, u64)>> {
    debug_assert!(
        p > 0,
        "vanishing derivative of a nonconstant polynomial in characteristic 0"
    );
    let root = poly::deflate(base, a, p as usize).expect("vanishing derivative means a polynomial in X^p");
    Ok(separable_powers(base, &root)?
        .into_iter()
        .map(|(f, m)| (f, m * p))
        .collect())
}

/// Writes each monic input as a product of powers of pairwise strongly
/// coprime polynomials `f(X^q)` with `f` separable.
///
/// Separable cores of all inputs are refined into one gcd-free basis. For a
/// core `f` occurring with multiplicities `m_i`, the part is `f(X^q)` where
/// `q` is the largest power of the characteristic dividing every `m_i`
/// (1 in characteristic 0), and the exponents become `m_i / q`.
pub fn separable_decompose(ring: &Ring, polys: &[Element]) -> Result<SeparableDecomposition> {
    let base = field_base(ring)?;
    for f in polys {
        match f {
            Element::Poly(c) if c.len() > 1 && c.last().is_some_and(|x| base.is_one(x)) => {}
            Element::Poly(_) => {
                return Err(AlgebraError::Precondition(format!(
                    "{} is not monic of positive degree",
                    ring.display(f)
                )))
            }
            _ => panic!("element does not belong to {ring}"),
        }
    }
    let mut cores = Vec::new();
    for f in polys {
        let coeffs = f.as_coefficients().unwrap();
        cores.extend(
            separable_powers(base, coeffs)?
                .into_iter()
                .map(|(g, _)| Element::Poly(g)),
        );
    }
    let basis = refine(ring, cores)?;

    let multiplicities: Vec<Vec<u64>> = polys
        .iter()
        .map(|f| basis.iter().map(|b| valuation(ring, b, f).0).collect())
        .collect();
    let char_p = ring.characteristic();
    let qs: Vec<u64> = (0..basis.len())
        .map(|j| {
            if char_p == 0 {
                return 1;
            }
            multiplicities
                .iter()
                .map(|row| row[j])
                .filter(|&m| m > 0)
                .map(|m| {
                    let mut q = 1;
                    while m % (q * char_p) == 0 {
                        q *= char_p;
                    }
                    q
                })
                .min()
                .unwrap_or(1)
        })
        .collect();

    let parts: Vec<SeparablePart> = basis
        .into_iter()
        .zip(&qs)
        .map(|(core, &q)| {
            let stored = Element::Poly(poly::inflate(base, core.as_coefficients().unwrap(), q as usize));
            SeparablePart { core, q, stored }
        })
        .collect();
    let exponents = multiplicities
        .iter()
        .map(|row| row.iter().zip(&qs).map(|(m, q)| m / q).collect())
        .collect();

    let mut witnesses = Vec::new();
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            let cert = ring.bezout(&parts[i].stored, &parts[j].stored)?;
            debug_assert!(ring.is_one(&cert.g));
            witnesses.push(StrongCoprimality {
                first: i,
                second: j,
                u: cert.s,
                v: cert.t,
            });
        }
    }
    Ok(SeparableDecomposition {
        parts,
        exponents,
        witnesses,
    })
}
