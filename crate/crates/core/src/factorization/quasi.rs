use crate::error::{AlgebraError, Result};
use crate::rings::{Capability, Element, Ring};

/// A gcd-free basis of a family of nonzero elements.
///
/// Input `i` equals `units[i] · ∏_j basis[j]^exponents[i][j]`, the basis
/// elements are pairwise relatively prime, canonical and nonunits. The basis
/// is not unique and not necessarily minimal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoprimeBasis {
    pub basis: Vec<Element>,
    pub exponents: Vec<Vec<u64>>,
    pub units: Vec<Element>,
}

/// Outcome of re-verifying a [`CoprimeBasis`] against its inputs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CoprimeBasisCheck {
    pub pairwise_coprime: bool,
    pub nonunit_canonical_basis: bool,
    pub units_invertible: bool,
    pub reconstruction: bool,
    pub maximal_exponents: bool,
}

impl CoprimeBasisCheck {
    pub fn all(&self) -> bool {
        self.pairwise_coprime
            && self.nonunit_canonical_basis
            && self.units_invertible
            && self.reconstruction
            && self.maximal_exponents
    }
}

impl CoprimeBasis {
    pub fn check(&self, ring: &Ring, inputs: &[Element]) -> Result<CoprimeBasisCheck> {
        let mut pairwise_coprime = true;
        for (a, x) in self.basis.iter().enumerate() {
            for y in &self.basis[a + 1..] {
                if ring.is_unit(&ring.gcd(x, y)?).is_none() {
                    pairwise_coprime = false;
                }
            }
        }
        let nonunit_canonical_basis = self
            .basis
            .iter()
            .all(|p| !ring.is_zero(p) && ring.is_unit(p).is_none() && ring.normalize(p) == *p);
        let units_invertible = self.units.iter().all(|u| ring.is_unit(u).is_some());
        let shapes_agree = self.units.len() == inputs.len()
            && self.exponents.len() == inputs.len()
            && self.exponents.iter().all(|row| row.len() == self.basis.len());
        let reconstruction = shapes_agree
            && inputs.iter().enumerate().all(|(i, x)| {
                let powers: Vec<Element> = self
                    .basis
                    .iter()
                    .zip(&self.exponents[i])
                    .map(|(p, &e)| ring.pow(p, e))
                    .collect();
                ring.mul(&self.units[i], &ring.product(&powers)) == *x
            });
        let maximal_exponents = shapes_agree
            && inputs.iter().enumerate().all(|(i, x)| {
                self.basis.iter().zip(&self.exponents[i]).all(|(p, &e)| {
                    ring.divides(&ring.pow(p, e), x).is_some() && ring.divides(&ring.pow(p, e + 1), x).is_none()
                })
            });
        Ok(CoprimeBasisCheck {
            pairwise_coprime,
            nonunit_canonical_basis,
            units_invertible,
            reconstruction,
            maximal_exponents,
        })
    }
}

/// Refines canonical nonunits into a pairwise coprime family such that each
/// of them is a product of members.
///
/// Whenever two members `a`, `b` share a nonunit gcd `g`, they are replaced
/// by the nonunits among `g`, `a/g`, `b/g`. The sum of bound witnesses of
/// the members strictly drops on every replacement, so the loop ends.
pub(crate) fn refine(ring: &Ring, seeds: impl IntoIterator<Item = Element>) -> Result<Vec<Element>> {
    let mut members: Vec<Element> = Vec::new();
    let push = |members: &mut Vec<Element>, x: Element| {
        let x = ring.normalize(&x);
        if ring.is_unit(&x).is_none() && !members.contains(&x) {
            members.push(x);
        }
    };
    for x in seeds {
        push(&mut members, x);
    }
    'outer: loop {
        for i in 0..members.len() {
            for j in i + 1..members.len() {
                let g = ring.gcd(&members[i], &members[j])?;
                if ring.is_unit(&g).is_some() {
                    continue;
                }
                let b = members.remove(j);
                let a = members.remove(i);
                let a_rest = ring.divides(&g, &a).expect("gcd divides");
                let b_rest = ring.divides(&g, &b).expect("gcd divides");
                for x in [g, a_rest, b_rest] {
                    push(&mut members, x);
                }
                continue 'outer;
            }
        }
        break;
    }
    members.sort_by_key(|x| (x.degree(), x.clone()));
    Ok(members)
}

/// Number of times `p` divides `x`, and the cofactor left over.
pub(crate) fn valuation(ring: &Ring, p: &Element, x: &Element) -> (u64, Element) {
    let mut rest = x.clone();
    let mut e = 0;
    while let Some(q) = ring.divides(p, &rest) {
        rest = q;
        e += 1;
    }
    (e, rest)
}

/// Quasi-factorization: a gcd-free basis for `xs`.
pub fn quasi_factorize(ring: &Ring, xs: &[Element]) -> Result<CoprimeBasis> {
    ring.require(Capability::Gcd)?;
    ring.require(Capability::BoundWitness)?;
    if xs.iter().any(|x| ring.is_zero(x)) {
        return Err(AlgebraError::ZeroElement);
    }
    let basis = refine(ring, xs.iter().cloned())?;
    let mut exponents = Vec::with_capacity(xs.len());
    let mut units = Vec::with_capacity(xs.len());
    for x in xs {
        let mut rest = x.clone();
        let row = basis
            .iter()
            .map(|p| {
                let (e, r) = valuation(ring, p, &rest);
                rest = r;
                e
            })
            .collect();
        debug_assert!(ring.is_unit(&rest).is_some(), "refinement left a nonunit cofactor");
        exponents.push(row);
        units.push(rest);
    }
    Ok(CoprimeBasis {
        basis,
        exponents,
        units,
    })
}
