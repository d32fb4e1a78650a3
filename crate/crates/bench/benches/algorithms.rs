use copra_bench::{fp_poly_matrix, integer_family, integer_matrix, monic_fp, rng};
use copra_core::{primary_decompose_int, quasi_factorize, separable_decompose, smith_normal_form, Ring};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use num_bigint::BigInt;

fn snf(c: &mut Criterion) {
    let mut group = c.benchmark_group("smith_normal_form");
    for n in [2usize, 4, 6, 8] {
        let mut r = rng(n as u64);
        let a = integer_matrix(&mut r, n, 99);
        group.bench_with_input(BenchmarkId::new("integers", n), &a, |b, a| {
            b.iter(|| smith_normal_form(a).unwrap())
        });
        let a = fp_poly_matrix(&mut r, 5, n, 5);
        group.bench_with_input(BenchmarkId::new("f5[x]", n), &a, |b, a| {
            b.iter(|| smith_normal_form(a).unwrap())
        });
    }
    group.finish();
}

fn factorization(c: &mut Criterion) {
    let mut r = rng(7);
    let family = integer_family(&mut r, 6, 10_000);
    c.bench_function("quasi_factorize/6 integers", |b| {
        b.iter(|| quasi_factorize(&Ring::Integers, &family).unwrap())
    });

    let f3x = Ring::poly(Ring::prime_field(3).unwrap()).unwrap();
    let f = monic_fp(&mut r, 3, 4);
    let g = monic_fp(&mut r, 3, 3);
    let input = vec![f3x.mul(&f3x.pow(&f, 3), &g), f3x.mul(&f, &f3x.pow(&g, 9))];
    c.bench_function("separable_decompose/f3", |b| {
        b.iter(|| separable_decompose(&f3x, &input).unwrap())
    });

    let n = BigInt::from(200_560_490_130u64);
    c.bench_function("primary_decompose_int", |b| {
        b.iter(|| primary_decompose_int(&n).unwrap())
    });
}

criterion_group!(benches, snf, factorization);
criterion_main!(benches);
