//! Seeded workloads shared by the benchmarks.

use copra_core::{Element, Matrix, Ring};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Square integer matrix with entries in `[-bound, bound]`.
pub fn integer_matrix(rng: &mut impl Rng, n: usize, bound: i64) -> Matrix {
    let entries = (0..n * n)
        .map(|_| Element::Int(BigInt::from(rng.gen_range(-bound..=bound))))
        .collect();
    Matrix::new(Ring::Integers, n, n, entries).expect("shape matches")
}

/// Square matrix over 𝔽_p\[X\] with entries of degree below `degree`.
pub fn fp_poly_matrix(rng: &mut impl Rng, p: u64, n: usize, degree: usize) -> Matrix {
    let ring = Ring::poly(Ring::prime_field(p).expect("prime")).expect("one level");
    let entries = (0..n * n)
        .map(|_| {
            let mut c: Vec<Element> = (0..degree).map(|_| Element::Residue(rng.gen_range(0..p))).collect();
            while c.last() == Some(&Element::Residue(0)) {
                c.pop();
            }
            Element::Poly(c)
        })
        .collect();
    Matrix::new(ring, n, n, entries).expect("shape matches")
}

pub fn integer_family(rng: &mut impl Rng, len: usize, max: i64) -> Vec<Element> {
    (0..len).map(|_| Element::int(rng.gen_range(2..=max))).collect()
}

/// Monic polynomial over 𝔽_p of the given degree.
pub fn monic_fp(rng: &mut impl Rng, p: u64, degree: usize) -> Element {
    let mut c: Vec<Element> = (0..degree).map(|_| Element::Residue(rng.gen_range(0..p))).collect();
    c.push(Element::Residue(1));
    Element::Poly(c)
}
