//! Finitely presented modules over a constructive PID.
//!
//! A presentation with `n` generators and relation matrix `A` (`n` rows,
//! one column per relation) presents `coker A = Rⁿ / (column span of A)`.
//! Its Smith form yields the invariant factor decomposition
//! `R/(d₁) ⊕ … ⊕ R/(d_k) ⊕ R^r`, which is unique and therefore decides
//! isomorphism.
//!
//! Torsion factors are listed by ascending divisibility, `d₁ | d₂ | …`. The
//! equivalent chain of ideals `(d₁) ⊇ (d₂) ⊇ …` is the same data.

use crate::error::{AlgebraError, Result};
use crate::linalg::{smith_normal_form, Matrix};
use crate::rings::{Capability, Element, Ring};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generators: usize,
    relations: Matrix,
}

impl Presentation {
    pub fn new(generators: usize, relations: Matrix) -> Result<Presentation> {
        if relations.rows() != generators {
            return Err(AlgebraError::ShapeMismatch(format!(
                "{generators} generators but relation matrix has {} rows",
                relations.rows()
            )));
        }
        Ok(Presentation { generators, relations })
    }

    /// The free module `Rⁿ`.
    pub fn free(ring: Ring, generators: usize) -> Presentation {
        Presentation {
            generators,
            relations: Matrix::zeros(ring, generators, 0),
        }
    }

    /// `R/(d₁) ⊕ … ⊕ R/(d_k)`.
    pub fn cyclic_sum(ring: Ring, factors: &[Element]) -> Result<Presentation> {
        let n = factors.len();
        Presentation::new(n, Matrix::diagonal(ring, n, n, factors)?)
    }

    pub fn ring(&self) -> &Ring {
        self.relations.ring()
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn relations(&self) -> &Matrix {
        &self.relations
    }
}

/// `R/(d₁) ⊕ … ⊕ R/(d_k) ⊕ R^free_rank` with each `dᵢ` nonzero, nonunit,
/// canonical and dividing the next.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantFactorDecomposition {
    pub torsion: Vec<Element>,
    pub free_rank: usize,
}

impl InvariantFactorDecomposition {
    pub fn is_valid(&self, ring: &Ring) -> bool {
        self.torsion
            .iter()
            .all(|d| !ring.is_zero(d) && ring.is_unit(d).is_none() && ring.normalize(d) == *d)
            && self.torsion.windows(2).all(|w| ring.divides(&w[0], &w[1]).is_some())
    }
}

/// Structure decomposition of the presented module.
pub fn decompose(p: &Presentation) -> Result<InvariantFactorDecomposition> {
    let ring = p.ring();
    ring.require(Capability::RecognizableUnits)?;
    let snf = smith_normal_form(&p.relations)?;
    let nonzero: Vec<Element> = snf.diagonal().into_iter().filter(|d| !ring.is_zero(d)).collect();
    let free_rank = p.generators - nonzero.len();
    let torsion = nonzero.into_iter().filter(|d| ring.is_unit(d).is_none()).collect();
    Ok(InvariantFactorDecomposition { torsion, free_rank })
}

fn same_ring(p1: &Presentation, p2: &Presentation) -> Result<()> {
    if p1.ring() != p2.ring() {
        return Err(AlgebraError::RingMismatch {
            left: p1.ring().to_string(),
            right: p2.ring().to_string(),
        });
    }
    Ok(())
}

/// Whether the two presentations present isomorphic modules.
pub fn same_module(p1: &Presentation, p2: &Presentation) -> Result<bool> {
    same_ring(p1, p2)?;
    Ok(decompose(p1)? == decompose(p2)?)
}

/// Block-diagonal presentation of `M₁ ⊕ M₂`.
pub fn direct_sum(p1: &Presentation, p2: &Presentation) -> Result<Presentation> {
    same_ring(p1, p2)?;
    Presentation::new(
        p1.generators + p2.generators,
        p1.relations.block_diagonal(&p2.relations)?,
    )
}
