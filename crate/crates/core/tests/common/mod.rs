//! Brute-force oracles and random generators for tests.
//!
//! Nothing here calls into the Smith form or factorization code: minors are
//! expanded by cofactors, module orders are counted by enumerating a finite
//! group, and primes come from a sieve.

#![allow(dead_code)]

use std::collections::VecDeque;

use copra_core::{Element, Matrix, Ring};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

pub type IntMatrix = Vec<Vec<BigInt>>;

pub fn int_matrix(rows: &[Vec<i64>]) -> IntMatrix {
    rows.iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

pub fn to_matrix(a: &IntMatrix, cols: usize) -> Matrix {
    let entries = a.iter().flatten().map(|x| Element::Int(x.clone())).collect();
    Matrix::new(Ring::Integers, a.len(), cols, entries).unwrap()
}

pub fn from_matrix(m: &Matrix) -> IntMatrix {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(|x| x.as_int().unwrap().clone()).collect())
        .collect()
}

/// Determinant by cofactor expansion along the first row.
pub fn det(a: &IntMatrix) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    if n == 1 {
        return a[0][0].clone();
    }
    let mut total = BigInt::zero();
    for j in 0..n {
        if a[0][j].is_zero() {
            continue;
        }
        let minor: IntMatrix = a[1..]
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|&(k, _)| k != j)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let term = &a[0][j] * det(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if k > n {
        return vec![];
    }
    let mut out = Vec::new();
    for first in 0..=n - k {
        for mut rest in combinations(n - first - 1, k - 1) {
            for x in &mut rest {
                *x += first + 1;
            }
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Δ_k = gcd of all k×k minors, for k = 1..=min(rows, cols).
pub fn determinantal_divisors(a: &IntMatrix, cols: usize) -> Vec<BigInt> {
    let rows = a.len();
    (1..=rows.min(cols))
        .map(|k| {
            let mut g = BigInt::zero();
            for rs in combinations(rows, k) {
                for cs in combinations(cols, k) {
                    let minor: IntMatrix = rs
                        .iter()
                        .map(|&i| cs.iter().map(|&j| a[i][j].clone()).collect())
                        .collect();
                    g = g.gcd(&det(&minor));
                }
            }
            g
        })
        .collect()
}

/// Smith diagonal from determinantal divisors: d_k = Δ_k / Δ_{k−1}, 0 once
/// Δ_k vanishes.
pub fn smith_diagonal_oracle(a: &IntMatrix, cols: usize) -> Vec<BigInt> {
    let deltas = determinantal_divisors(a, cols);
    let mut prev = BigInt::one();
    deltas
        .into_iter()
        .map(|delta| {
            if delta.is_zero() {
                BigInt::zero()
            } else {
                let d = &delta / &prev;
                prev = delta;
                d
            }
        })
        .collect()
}

/// |ℤⁿ / column span| by enumeration, or `None` when the quotient is
/// infinite or the enumeration would exceed `limit` points.
///
/// With Δ = gcd of the maximal minors, `Δ·ℤⁿ` lies in the column span, so
/// the quotient equals `(ℤ/Δ)ⁿ / H` with `H` the subgroup generated by the
/// columns mod Δ; `H` is enumerated breadth-first.
pub fn coset_count(a: &IntMatrix, cols: usize, limit: u64) -> Option<u64> {
    let n = a.len();
    let delta = determinantal_divisors(a, cols)
        .last()
        .cloned()
        .unwrap_or_else(BigInt::one);
    if n == 0 {
        return Some(1);
    }
    if delta.is_zero() {
        return None;
    }
    let m = delta.abs().to_u64()?;
    let size = m.checked_pow(n as u32).filter(|&s| s <= limit)?;
    let gens: Vec<Vec<u64>> = (0..cols)
        .map(|j| {
            (0..n)
                .map(|i| a[i][j].mod_floor(&BigInt::from(m)).to_u64().unwrap())
                .collect()
        })
        .collect();
    let index = |v: &[u64]| v.iter().fold(0u64, |acc, &x| acc * m + x);
    let mut seen = vec![false; size as usize];
    let zero = vec![0u64; n];
    seen[index(&zero) as usize] = true;
    let mut queue = VecDeque::from([zero]);
    let mut count = 1u64;
    while let Some(v) = queue.pop_front() {
        for g in &gens {
            let w: Vec<u64> = v.iter().zip(g).map(|(x, y)| (x + y) % m).collect();
            let k = index(&w) as usize;
            if !seen[k] {
                seen[k] = true;
                count += 1;
                queue.push_back(w);
            }
        }
    }
    Some(size / count)
}

pub fn random_int_matrix(rng: &mut impl Rng, rows: usize, cols: usize, bound: i64) -> IntMatrix {
    (0..rows)
        .map(|_| (0..cols).map(|_| BigInt::from(rng.gen_range(-bound..=bound))).collect())
        .collect()
}

/// Product of `ops` random elementary matrices (swap, negate, add a small
/// multiple of one row to another).
pub fn random_unimodular(rng: &mut impl Rng, n: usize, ops: usize) -> IntMatrix {
    let mut m: IntMatrix = (0..n)
        .map(|i| (0..n).map(|j| BigInt::from((i == j) as i64)).collect())
        .collect();
    if n == 0 {
        return m;
    }
    for _ in 0..ops {
        let i = rng.gen_range(0..n);
        let j = rng.gen_range(0..n);
        match rng.gen_range(0..3) {
            0 => m.swap(i, j),
            1 => m[i].iter_mut().for_each(|x| *x = -x.clone()),
            _ if i != j => {
                let c = BigInt::from(rng.gen_range(-3i64..=3));
                let row_j = m[j].clone();
                for (x, y) in m[i].iter_mut().zip(row_j) {
                    *x += &c * y;
                }
            }
            _ => {}
        }
    }
    m
}

pub fn random_poly(rng: &mut impl Rng, base: &Ring, max_degree: usize, bound: i64) -> Element {
    let degree = rng.gen_range(0..=max_degree);
    let mut c: Vec<Element> = (0..=degree)
        .map(|_| match base {
            Ring::PrimeField(p) => Element::Residue(rng.gen_range(0..p.get())),
            Ring::Rationals => Element::Rat(BigRational::from_integer(rng.gen_range(-bound..=bound).into())),
            _ => Element::int(rng.gen_range(-bound..=bound)),
        })
        .collect();
    while c.last().is_some_and(|x| base.is_zero(x)) {
        c.pop();
    }
    Element::Poly(c)
}

pub fn random_poly_matrix(rng: &mut impl Rng, ring: &Ring, rows: usize, cols: usize, max_degree: usize) -> Matrix {
    let base = ring.base().unwrap();
    let entries = (0..rows * cols)
        .map(|_| random_poly(rng, base, max_degree, 5))
        .collect();
    Matrix::new(ring.clone(), rows, cols, entries).unwrap()
}

/// Monic polynomial over 𝔽_p of exact degree `degree`.
pub fn random_monic(rng: &mut impl Rng, p: u64, degree: usize) -> Element {
    let mut c: Vec<Element> = (0..degree).map(|_| Element::Residue(rng.gen_range(0..p))).collect();
    c.push(Element::Residue(1));
    Element::Poly(c)
}

/// Radicals of 0..=n from a smallest-prime-factor sieve.
pub fn radicals(n: usize) -> Vec<u64> {
    let mut spf = vec![0usize; n + 1];
    for i in 2..=n {
        if spf[i] == 0 {
            let mut j = i;
            while j <= n {
                if spf[j] == 0 {
                    spf[j] = i;
                }
                j += i;
            }
        }
    }
    (0..=n)
        .map(|k| {
            let (mut m, mut rad, mut last) = (k, 1u64, 0usize);
            while m > 1 {
                let p = spf[m];
                if p != last {
                    rad *= p as u64;
                    last = p;
                }
                m /= p;
            }
            rad
        })
        .collect()
}

/// Plain Euclid over ℚ\[X\] on coefficient vectors, independent of the
/// library's polynomial code. Returns the monic gcd.
pub fn rational_gcd(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    fn trim(mut v: Vec<BigRational>) -> Vec<BigRational> {
        while v.last().is_some_and(|x| x.is_zero()) {
            v.pop();
        }
        v
    }
    let (mut r0, mut r1) = (trim(a.to_vec()), trim(b.to_vec()));
    while !r1.is_empty() {
        let mut rem = r0.clone();
        while rem.len() >= r1.len() {
            let shift = rem.len() - r1.len();
            let c = rem.last().unwrap() / r1.last().unwrap();
            for (i, x) in r1.iter().enumerate() {
                rem[i + shift] -= &c * x;
            }
            rem = trim(rem);
            if rem.is_empty() {
                break;
            }
        }
        r0 = std::mem::replace(&mut r1, rem);
    }
    match r0.last().cloned() {
        None => r0,
        Some(lead) => r0.into_iter().map(|x| x / &lead).collect(),
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// Plain Euclid over 𝔽_p\[X\] for small `p`, on residue vectors. Returns the
/// monic gcd.
pub fn prime_field_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    fn trim(mut v: Vec<u64>) -> Vec<u64> {
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    }
    let (mut r0, mut r1) = (trim(a.to_vec()), trim(b.to_vec()));
    while !r1.is_empty() {
        let mut rem = r0.clone();
        let inv = pow_mod(*r1.last().unwrap(), p - 2, p);
        while rem.len() >= r1.len() {
            let shift = rem.len() - r1.len();
            let c = rem.last().unwrap() * inv % p;
            for (i, x) in r1.iter().enumerate() {
                rem[i + shift] = (rem[i + shift] + p - c * x % p) % p;
            }
            rem = trim(rem);
            if rem.is_empty() {
                break;
            }
        }
        r0 = std::mem::replace(&mut r1, rem);
    }
    match r0.last().copied() {
        None => r0,
        Some(lead) => {
            let inv = pow_mod(lead, p - 2, p);
            r0.into_iter().map(|x| x * inv % p).collect()
        }
    }
}

/// Formal derivative of a residue vector.
pub fn prime_field_derivative(a: &[u64], p: u64) -> Vec<u64> {
    a.iter()
        .enumerate()
        .skip(1)
        .map(|(k, &c)| (k as u64 % p) * c % p)
        .collect()
}
