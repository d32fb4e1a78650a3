//! Kernels and linear systems through the Smith form.
//!
//! With `U·A·V = D`, `A·x = b` is equivalent to `D·y = U·b` for `x = V·y`,
//! and a diagonal system is solved entry by entry with exact division.

use super::{smith_normal_form, Matrix};
use crate::error::{AlgebraError, Result};

/// Columns generating `{x : A·x = 0}`. Their number is `cols(A) − rank(A)`
/// and they are part of a basis of the ambient free module.
pub fn kernel(a: &Matrix) -> Result<Matrix> {
    let snf = smith_normal_form(a)?;
    let rank = snf.rank();
    Ok(snf.v.select_columns(rank..a.cols()))
}

/// An `x` with `A·x = b`, or `None` when `b` is outside the column span.
pub fn solve_membership(a: &Matrix, b: &Matrix) -> Result<Option<Matrix>> {
    if a.ring() != b.ring() {
        return Err(AlgebraError::RingMismatch {
            left: a.ring().to_string(),
            right: b.ring().to_string(),
        });
    }
    if b.cols() != 1 || b.rows() != a.rows() {
        return Err(AlgebraError::ShapeMismatch(format!(
            "right-hand side is {}x{}, expected {}x1",
            b.rows(),
            b.cols(),
            a.rows()
        )));
    }
    let ring = a.ring();
    let snf = smith_normal_form(a)?;
    let c = snf.u.mul(b)?;
    let diag = snf.diagonal();
    let mut y = Vec::with_capacity(a.cols());
    for i in 0..a.cols() {
        let value = match diag.get(i) {
            Some(d) if !ring.is_zero(d) => match ring.divides(d, c.get(i, 0)) {
                Some(q) => q,
                None => return Ok(None),
            },
            _ => ring.zero(),
        };
        y.push(value);
    }
    let rank = snf.rank();
    if (rank..a.rows()).any(|i| !ring.is_zero(c.get(i, 0))) {
        return Ok(None);
    }
    let y = Matrix::column_vector(ring.clone(), y)?;
    Ok(Some(snf.v.mul(&y)?))
}
