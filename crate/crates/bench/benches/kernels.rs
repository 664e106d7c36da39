//! Benchmarks for the kernels every verification suite leans on: the
//! double shuffle solve, the closed coefficient route, exact nullspaces,
//! and the push rotation on a dense series.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use dsl_core::{
    delta_rho, dmr0_component, push, qi, qr, words_of_length, Alphabet, QMatrix, Series,
};

fn bench_dmr0(c: &mut Criterion) {
    c.bench_function("dmr0_component/5", |b| b.iter(|| dmr0_component(black_box(5))));
    c.bench_function("dmr0_component/6", |b| b.iter(|| dmr0_component(black_box(6))));
}

fn bench_delta_rho(c: &mut Criterion) {
    c.bench_function("delta_rho/6", |b| b.iter(|| delta_rho(black_box(6))));
}

fn bench_nullspace(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let (rows, cols) = (48, 64);
    let mut m = QMatrix::zero(rows, cols);
    for r in 0..rows {
        for col in 0..cols {
            m.set(r, col, qr(rng.gen_range(-9..=9), rng.gen_range(1..=4)));
        }
    }
    c.bench_function("nullspace/48x64", |b| b.iter(|| black_box(&m).nullspace()));
}

fn bench_push(c: &mut Criterion) {
    let alphabet = Alphabet::e01();
    let degree = 9;
    let mut k = 0i64;
    let dense = Series::from_terms(
        &alphabet,
        degree,
        words_of_length(&alphabet, degree).into_iter().map(|w| {
            k += 1;
            (w, qi(k % 7 - 3))
        }),
    );
    c.bench_function("push/dense-degree-9", |b| b.iter(|| push(black_box(&dense))));
}

criterion_group!(benches, bench_dmr0, bench_delta_rho, bench_nullspace, bench_push);
criterion_main!(benches);
