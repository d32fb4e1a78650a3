//! Exact constructive algebra over principal ideal domains.
//!
//! The crate is organized around a small capability tower of rings
//! (discrete ring, GCD domain, Bézout domain, bounded PID) with concrete
//! instances for the integers, the rationals, prime fields and univariate
//! polynomial rings over any of those. On top of it sit
//!
//! * [`linalg`]: dense matrices, Smith normal form with invertible
//!   transformation certificates, kernels and linear system solving;
//! * [`fpmodules`]: finitely presented modules over a PID, their invariant
//!   factor decomposition and isomorphism testing;
//! * [`factorization`]: bound witnesses, gcd-free (coprime) bases,
//!   polynomial gcd, separable decomposition and primary decomposition of
//!   integer ideals.
//!
//! All values are immutable and every operation is a pure function.

pub mod codec;
pub mod error;
pub mod factorization;
pub mod fpmodules;
pub mod linalg;
pub mod rings;

pub use error::{AlgebraError, Result};
pub use factorization::{
    bound_witness, is_primary_int, poly_gcd, primary_decompose_int, quasi_factorize, separable_decompose, CoprimeBasis,
    PrimaryComponent, PrimaryDecomposition, SeparableDecomposition, SeparablePart, StrongCoprimality,
};
pub use fpmodules::{decompose, direct_sum, same_module, InvariantFactorDecomposition, Presentation};
pub use linalg::{kernel, smith_normal_form, snf_equivalent, solve_membership, Matrix, SmithDecomposition};
pub use rings::{BezoutCertificate, Capability, Element, Prime, Ring};
