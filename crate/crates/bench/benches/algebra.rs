use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use uhsl2_core::fcoeff::{f_closed, f_recurrence};
use uhsl2_core::rmatrix::{check_ybe, r_matrix};
use uhsl2_core::verify::{casimir, run_relation_suite};
use uhsl2_core::verma::quotient_route;
use uhsl2_core::{build_irrep, Epsilon, HalfInt};

fn spin(t: u32) -> HalfInt {
    HalfInt::from_twice(t)
}

fn irreps(c: &mut Criterion) {
    let mut g = c.benchmark_group("build_irrep");
    for t in [1, 3, 5, 7] {
        g.bench_with_input(BenchmarkId::from_parameter(spin(t)), &t, |b, &t| {
            b.iter(|| build_irrep(black_box(spin(t)), Epsilon::Plus).unwrap())
        });
    }
    g.finish();

    let mut g = c.benchmark_group("quotient_route");
    for lambda in [3, 5, 7] {
        g.bench_with_input(BenchmarkId::from_parameter(lambda), &lambda, |b, &l| {
            b.iter(|| quotient_route(black_box(l), Epsilon::Minus).unwrap())
        });
    }
    g.finish();
}

fn r_matrices(c: &mut Criterion) {
    c.bench_function("r_matrix 3/2 x 3/2", |b| {
        b.iter(|| r_matrix(spin(3), Epsilon::Plus, spin(3), Epsilon::Minus).unwrap())
    });
    c.bench_function("check_ybe (3/2)^3 mixed", |b| {
        let triple = [
            (spin(3), Epsilon::Plus),
            (spin(3), Epsilon::Minus),
            (spin(3), Epsilon::Plus),
        ];
        b.iter(|| check_ybe(black_box(triple)).unwrap())
    });
}

fn coefficients(c: &mut Criterion) {
    c.bench_function("f_recurrence(30)", |b| b.iter(|| f_recurrence(black_box(30))));
    c.bench_function("f_closed(30)", |b| b.iter(|| f_closed(black_box(30))));
}

fn suites(c: &mut Criterion) {
    let r = build_irrep(spin(7), Epsilon::Minus).unwrap();
    c.bench_function("casimir j=7/2", |b| b.iter(|| casimir(black_box(&r)).unwrap()));
    let mut g = c.benchmark_group("suites");
    g.sample_size(10);
    g.bench_function("relations 7/2", |b| b.iter(|| run_relation_suite(spin(7))));
    g.finish();
}

criterion_group!(benches, irreps, r_matrices, coefficients, suites);
criterion_main!(benches);
