use thiserror::Error;

use crate::rings::Capability;

/// Errors raised by the algebra kernel.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("ring {ring} lacks the {capability} capability")]
    CapabilityMissing { ring: String, capability: Capability },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: String, right: String },

    #[error("matrix is not in Smith normal form: {0}")]
    NotSmithForm(String),

    #[error("zero element has no bound")]
    ZeroElement,

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("unsupported ring: {0}")]
    UnsupportedRing(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;
