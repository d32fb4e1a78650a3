//! Exact dense linear algebra over ring instances.

mod matrix;
mod snf;
mod solve;

pub use matrix::Matrix;
pub use snf::{is_smith_form, smith_normal_form, snf_equivalent, SmithCheck, SmithDecomposition};
pub use solve::{kernel, solve_membership};
