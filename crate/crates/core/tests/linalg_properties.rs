mod common;

use common::*;
use copra_core::{kernel, smith_normal_form, solve_membership, Element, Matrix, Ring};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn determinantal_oracle_on_small_example() {
    let a = int_matrix(&[vec![2, 4], vec![6, 8]]);
    assert_eq!(determinantal_divisors(&a, 2), [BigInt::from(2), BigInt::from(8)]);
    assert_eq!(smith_diagonal_oracle(&a, 2), [BigInt::from(2), BigInt::from(4)]);
}

#[test]
fn smith_form_matches_determinantal_divisors() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..150 {
        let (r, c) = (rng.gen_range(0..=4), rng.gen_range(0..=4));
        let a = random_int_matrix(&mut rng, r, c, 30);
        let m = to_matrix(&a, c);
        let snf = smith_normal_form(&m).unwrap();
        let got: Vec<BigInt> = snf.diagonal().iter().map(|x| x.as_int().unwrap().clone()).collect();
        let expected: Vec<BigInt> = smith_diagonal_oracle(&a, c).into_iter().map(|x| x.abs()).collect();
        assert_eq!(got, expected, "{a:?}");
    }
}

#[test]
fn certificates_over_integers() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..200 {
        let (r, c) = (rng.gen_range(0..=6), rng.gen_range(0..=6));
        let m = to_matrix(&random_int_matrix(&mut rng, r, c, 99), c);
        let snf = smith_normal_form(&m).unwrap();
        assert!(snf.check(&m).unwrap().all(), "{m}");
    }
}

#[test]
fn certificates_over_rational_polynomials() {
    let qx = Ring::poly(Ring::Rationals).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..40 {
        let (r, c) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
        let m = random_poly_matrix(&mut rng, &qx, r, c, 4);
        let snf = smith_normal_form(&m).unwrap();
        assert!(snf.check(&m).unwrap().all(), "{m}");
    }
}

#[test]
fn certificates_over_prime_fields() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for p in [2u64, 3, 7] {
        let f = Ring::prime_field(p).unwrap();
        for _ in 0..30 {
            let (r, c) = (rng.gen_range(0..=5), rng.gen_range(0..=5));
            let entries = (0..r * c).map(|_| Element::Residue(rng.gen_range(0..p))).collect();
            let m = Matrix::new(f.clone(), r, c, entries).unwrap();
            let snf = smith_normal_form(&m).unwrap();
            assert!(snf.check(&m).unwrap().all());
            // over a field the diagonal is 1, ..., 1, 0, ..., 0
            let rank = snf.rank();
            assert!(snf.diagonal()[..rank].iter().all(|x| f.is_one(x)));
        }
    }
}

#[test]
fn invariant_under_unimodular_changes() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for _ in 0..100 {
        let (r, c) = (rng.gen_range(1..=5), rng.gen_range(1..=5));
        let a = to_matrix(&random_int_matrix(&mut rng, r, c, 20), c);
        let p = to_matrix(&random_unimodular(&mut rng, r, 10), r);
        let q = to_matrix(&random_unimodular(&mut rng, c, 10), c);
        let moved = p.mul(&a).unwrap().mul(&q).unwrap();
        assert_eq!(smith_normal_form(&moved).unwrap().d, smith_normal_form(&a).unwrap().d);
    }
}

/// Kernel columns generate the full solution lattice: same rank as the
/// solution space and saturated (their maximal minors are coprime).
#[test]
fn kernel_generates_solution_lattice() {
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    for _ in 0..100 {
        let (r, c) = (rng.gen_range(1..=3), rng.gen_range(1..=4));
        let a = random_int_matrix(&mut rng, r, c, 6);
        let m = to_matrix(&a, c);
        let k = kernel(&m).unwrap();
        assert!(m.mul(&k).unwrap().is_zero());
        let rank = determinantal_divisors(&a, c).iter().filter(|d| !d.is_zero()).count();
        assert_eq!(k.cols(), c - rank);
        if k.cols() > 0 {
            let kd = determinantal_divisors(&from_matrix(&k), k.cols());
            assert_eq!(kd.last().unwrap().abs(), BigInt::from(1), "{a:?}");
        }
    }
}

/// Small solutions of A·x = 0 found by scanning a box are reachable from the
/// kernel generators.
#[test]
fn kernel_covers_brute_force_solutions() {
    for row in [[2i64, 3], [2, 4], [0, 5], [6, -4]] {
        let m = to_matrix(&int_matrix(&[row.to_vec()]), 2);
        let k = kernel(&m).unwrap();
        for x in -12i64..=12 {
            for y in -12i64..=12 {
                if row[0] * x + row[1] * y != 0 {
                    continue;
                }
                let target = Matrix::column_vector(Ring::Integers, vec![Element::int(x), Element::int(y)]).unwrap();
                assert!(solve_membership(&k, &target).unwrap().is_some(), "{row:?} {x} {y}");
            }
        }
    }
}

#[test]
fn solutions_shift_by_kernel() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let mut solved = 0;
    for _ in 0..200 {
        let (r, c) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
        let a = to_matrix(&random_int_matrix(&mut rng, r, c, 5), c);
        let b = to_matrix(&random_int_matrix(&mut rng, r, 1, 5), 1);
        let Some(x) = solve_membership(&a, &b).unwrap() else {
            continue;
        };
        solved += 1;
        assert_eq!(a.mul(&x).unwrap(), b);
        let k = kernel(&a).unwrap();
        for j in 0..k.cols() {
            let z = k.select_columns([j]);
            assert_eq!(a.mul(&x.add(&z).unwrap()).unwrap(), b);
        }
    }
    assert!(solved > 20);
}

/// Membership failures are genuine: any b that is A·x for a small integer x
/// is found solvable.
#[test]
fn membership_is_complete_on_images() {
    let mut rng = ChaCha8Rng::seed_from_u64(18);
    for _ in 0..150 {
        let (r, c) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
        let a = to_matrix(&random_int_matrix(&mut rng, r, c, 9), c);
        let x = to_matrix(&random_int_matrix(&mut rng, c, 1, 9), 1);
        let b = a.mul(&x).unwrap();
        let found = solve_membership(&a, &b)
            .unwrap()
            .expect("image vector must be solvable");
        assert_eq!(a.mul(&found).unwrap(), b);
    }
}
