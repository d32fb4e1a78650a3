//! Smith normal form over a constructive PID with transformation
//! certificates.
//!
//! Every step is a 2×2 unimodular operation on a pair of rows or columns.
//! It is applied to the working matrix and to the transformation being
//! accumulated, and its inverse to the accumulated inverse, so `U·A·V = D`
//! and both inverses are available without ever inverting a matrix.

use num_bigint::BigInt;
use num_traits::Signed;

use super::Matrix;
use crate::error::{AlgebraError, Result};
use crate::rings::{Capability, Element, Ring};

/// `U·A·V = D` with `D` diagonal, each diagonal entry canonical and dividing
/// the next. `u_inv` and `v_inv` are the inverses of `u` and `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: Matrix,
    pub u_inv: Matrix,
    pub d: Matrix,
    pub v: Matrix,
    pub v_inv: Matrix,
}

/// Outcome of re-verifying a [`SmithDecomposition`] against its source.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SmithCheck {
    pub product: bool,
    pub u_inverse: bool,
    pub v_inverse: bool,
    pub diagonal: bool,
    pub divisibility_chain: bool,
    pub canonical: bool,
}

impl SmithCheck {
    pub fn all(&self) -> bool {
        self.product && self.u_inverse && self.v_inverse && self.diagonal && self.divisibility_chain && self.canonical
    }
}

impl SmithDecomposition {
    pub fn diagonal(&self) -> Vec<Element> {
        self.d.main_diagonal()
    }

    /// Number of nonzero diagonal entries.
    pub fn rank(&self) -> usize {
        let r = self.d.ring();
        self.diagonal().iter().filter(|x| !r.is_zero(x)).count()
    }

    pub fn check(&self, a: &Matrix) -> Result<SmithCheck> {
        let ring = a.ring();
        let product = self.u.mul(a)?.mul(&self.v)? == self.d;
        let u_inverse = self.u.mul(&self.u_inv)?.is_identity() && self.u_inv.mul(&self.u)?.is_identity();
        let v_inverse = self.v.mul(&self.v_inv)?.is_identity() && self.v_inv.mul(&self.v)?.is_identity();
        let diagonal = self.d.is_diagonal();
        let divisibility_chain = has_divisibility_chain(&self.d);
        let canonical = self.diagonal().iter().all(|x| ring.normalize(x) == *x);
        Ok(SmithCheck {
            product,
            u_inverse,
            v_inverse,
            diagonal,
            divisibility_chain,
            canonical,
        })
    }
}

fn has_divisibility_chain(d: &Matrix) -> bool {
    let diag = d.main_diagonal();
    diag.windows(2).all(|w| d.ring().divides(&w[0], &w[1]).is_some())
}

/// Diagonal with each diagonal entry dividing the next; entries need not be
/// canonical.
pub fn is_smith_form(d: &Matrix) -> bool {
    d.is_diagonal() && has_divisibility_chain(d)
}

/// A 2×2 unimodular matrix `[[m0, m1], [m2, m3]]` with its inverse.
struct Unimodular {
    m: [Element; 4],
    inv: [Element; 4],
}

impl Unimodular {
    fn swap(ring: &Ring) -> Unimodular {
        let m = [ring.zero(), ring.one(), ring.one(), ring.zero()];
        Unimodular { inv: m.clone(), m }
    }
}

fn apply_rows(ring: &Ring, mat: &mut Matrix, i: usize, j: usize, t: &[Element; 4]) {
    for k in 0..mat.cols() {
        let (x, y) = (mat.get(i, k).clone(), mat.get(j, k).clone());
        *mat.entry_mut(i, k) = ring.add(&ring.mul(&t[0], &x), &ring.mul(&t[1], &y));
        *mat.entry_mut(j, k) = ring.add(&ring.mul(&t[2], &x), &ring.mul(&t[3], &y));
    }
}

fn apply_cols(ring: &Ring, mat: &mut Matrix, i: usize, j: usize, t: &[Element; 4]) {
    for k in 0..mat.rows() {
        let (x, y) = (mat.get(k, i).clone(), mat.get(k, j).clone());
        *mat.entry_mut(k, i) = ring.add(&ring.mul(&x, &t[0]), &ring.mul(&y, &t[2]));
        *mat.entry_mut(k, j) = ring.add(&ring.mul(&x, &t[1]), &ring.mul(&y, &t[3]));
    }
}

/// Pivot measure: absolute value over ℤ, degree over k\[X\], constant over
/// a field. Bézout steps strictly decrease it, which bounds the number of
/// sweeps per pivot.
fn pivot_size(ring: &Ring, x: &Element) -> BigInt {
    match (ring, x) {
        (Ring::Integers, Element::Int(n)) => n.abs(),
        (Ring::Poly(_), Element::Poly(c)) => BigInt::from(c.len()),
        _ => BigInt::from(0),
    }
}

struct Reducer<'a> {
    ring: &'a Ring,
    d: Matrix,
    u: Matrix,
    u_inv: Matrix,
    v: Matrix,
    v_inv: Matrix,
}

impl Reducer<'_> {
    fn row_op(&mut self, i: usize, j: usize, t: &Unimodular) {
        apply_rows(self.ring, &mut self.d, i, j, &t.m);
        apply_rows(self.ring, &mut self.u, i, j, &t.m);
        apply_cols(self.ring, &mut self.u_inv, i, j, &t.inv);
    }

    fn col_op(&mut self, i: usize, j: usize, t: &Unimodular) {
        apply_cols(self.ring, &mut self.d, i, j, &t.m);
        apply_cols(self.ring, &mut self.v, i, j, &t.m);
        apply_rows(self.ring, &mut self.v_inv, i, j, &t.inv);
    }

    /// Multiplies row `i` by the unit `unit`.
    fn scale_row(&mut self, i: usize, unit: &Element) {
        let r = self.ring;
        let inv = r.is_unit(unit).expect("scaling by a unit");
        for k in 0..self.d.cols() {
            *self.d.entry_mut(i, k) = r.mul(unit, self.d.get(i, k));
        }
        for k in 0..self.u.cols() {
            *self.u.entry_mut(i, k) = r.mul(unit, self.u.get(i, k));
        }
        for k in 0..self.u_inv.rows() {
            *self.u_inv.entry_mut(k, i) = r.mul(self.u_inv.get(k, i), &inv);
        }
    }

    /// Zeroes `d[i][p]` against the pivot `d[p][p]` with a row operation.
    fn clear_below(&mut self, p: usize, i: usize) -> Result<()> {
        let r = self.ring;
        let (a, b) = (self.d.get(p, p).clone(), self.d.get(i, p).clone());
        let t = match r.divides(&a, &b) {
            Some(q) => Unimodular {
                m: [r.one(), r.zero(), r.neg(&q), r.one()],
                inv: [r.one(), r.zero(), q, r.one()],
            },
            None => {
                let cert = r.bezout(&a, &b)?;
                let a1 = r.divides(&cert.g, &a).expect("gcd divides");
                let b1 = r.divides(&cert.g, &b).expect("gcd divides");
                Unimodular {
                    m: [cert.s.clone(), cert.t.clone(), r.neg(&b1), a1.clone()],
                    inv: [a1, r.neg(&cert.t), b1, cert.s],
                }
            }
        };
        self.row_op(p, i, &t);
        Ok(())
    }

    /// Zeroes `d[p][j]` against the pivot `d[p][p]` with a column operation.
    fn clear_right(&mut self, p: usize, j: usize) -> Result<()> {
        let r = self.ring;
        let (a, b) = (self.d.get(p, p).clone(), self.d.get(p, j).clone());
        let t = match r.divides(&a, &b) {
            Some(q) => Unimodular {
                m: [r.one(), r.neg(&q), r.zero(), r.one()],
                inv: [r.one(), q, r.zero(), r.one()],
            },
            None => {
                let cert = r.bezout(&a, &b)?;
                let a1 = r.divides(&cert.g, &a).expect("gcd divides");
                let b1 = r.divides(&cert.g, &b).expect("gcd divides");
                Unimodular {
                    m: [cert.s.clone(), r.neg(&b1), cert.t.clone(), a1.clone()],
                    inv: [a1, b1, r.neg(&cert.t), cert.s],
                }
            }
        };
        self.col_op(p, j, &t);
        Ok(())
    }

    fn diagonalize(&mut self) -> Result<usize> {
        let (rows, cols) = (self.d.rows(), self.d.cols());
        let mut rank = 0;
        for p in 0..rows.min(cols) {
            let pivot = (p..rows)
                .flat_map(|i| (p..cols).map(move |j| (i, j)))
                .filter(|&(i, j)| !self.ring.is_zero(self.d.get(i, j)))
                .min_by_key(|&(i, j)| pivot_size(self.ring, self.d.get(i, j)));
            let Some((pi, pj)) = pivot else { break };
            if pi != p {
                self.row_op(p, pi, &Unimodular::swap(self.ring));
            }
            if pj != p {
                self.col_op(p, pj, &Unimodular::swap(self.ring));
            }
            loop {
                for i in p + 1..rows {
                    if !self.ring.is_zero(self.d.get(i, p)) {
                        self.clear_below(p, i)?;
                    }
                }
                for j in p + 1..cols {
                    if !self.ring.is_zero(self.d.get(p, j)) {
                        self.clear_right(p, j)?;
                    }
                }
                if (p + 1..rows).all(|i| self.ring.is_zero(self.d.get(i, p))) {
                    break;
                }
            }
            rank += 1;
        }
        Ok(rank)
    }

    /// Turns `diag(a, b)` at positions `i < j` into `diag(gcd, a·b/gcd)`.
    fn repair(&mut self, i: usize, j: usize) -> Result<()> {
        let r = self.ring;
        let add_col = Unimodular {
            m: [r.one(), r.zero(), r.one(), r.one()],
            inv: [r.one(), r.zero(), r.from_i64(-1), r.one()],
        };
        self.col_op(i, j, &add_col);
        self.clear_below(i, j)?;
        self.clear_right(i, j)
    }

    fn enforce_chain(&mut self, rank: usize) -> Result<()> {
        for i in 0..rank {
            for j in i + 1..rank {
                if self.ring.divides(self.d.get(i, i), self.d.get(j, j)).is_none() {
                    self.repair(i, j)?;
                }
            }
        }
        Ok(())
    }

    fn canonicalize(&mut self, rank: usize) {
        for i in 0..rank {
            let (_, unit) = self.ring.normalize_associate(self.d.get(i, i));
            if !self.ring.is_one(&unit) {
                let inv = self.ring.is_unit(&unit).expect("normalizing factor is a unit");
                self.scale_row(i, &inv);
            }
        }
    }
}

/// Smith normal form of `a` over ℤ, a field, or k\[X\].
pub fn smith_normal_form(a: &Matrix) -> Result<SmithDecomposition> {
    let ring = a.ring();
    ring.require_pid()?;
    let mut red = Reducer {
        ring,
        d: a.clone(),
        u: Matrix::identity(ring.clone(), a.rows()),
        u_inv: Matrix::identity(ring.clone(), a.rows()),
        v: Matrix::identity(ring.clone(), a.cols()),
        v_inv: Matrix::identity(ring.clone(), a.cols()),
    };
    let rank = red.diagonalize()?;
    red.enforce_chain(rank)?;
    red.canonicalize(rank);
    Ok(SmithDecomposition {
        u: red.u,
        u_inv: red.u_inv,
        d: red.d,
        v: red.v,
        v_inv: red.v_inv,
    })
}

/// Whether two Smith forms over the same GCD domain have associate
/// diagonal entries, i.e. present equivalent matrices.
pub fn snf_equivalent(d1: &Matrix, d2: &Matrix) -> Result<bool> {
    if d1.ring() != d2.ring() {
        return Err(AlgebraError::RingMismatch {
            left: d1.ring().to_string(),
            right: d2.ring().to_string(),
        });
    }
    if (d1.rows(), d1.cols()) != (d2.rows(), d2.cols()) {
        return Err(AlgebraError::ShapeMismatch(format!(
            "{}x{} vs {}x{}",
            d1.rows(),
            d1.cols(),
            d2.rows(),
            d2.cols()
        )));
    }
    d1.ring().require(Capability::Gcd)?;
    for d in [d1, d2] {
        if !is_smith_form(d) {
            return Err(AlgebraError::NotSmithForm(format!("{:?}", d.main_diagonal())));
        }
    }
    let ring = d1.ring();
    Ok(d1
        .main_diagonal()
        .iter()
        .zip(d2.main_diagonal())
        .all(|(x, y)| ring.are_associates(x, &y)))
}
