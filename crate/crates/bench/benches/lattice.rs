use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use latquot_bench::{integer_matrix, isometric_pair, lattice, rational_matrix};
use latquot_core::flat::{isometric_mod_rotation, shortest_vectors};

fn det(c: &mut Criterion) {
    let mut group = c.benchmark_group("det");
    for n in [3, 6, 10] {
        let m = rational_matrix(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &m, |b, m| {
            b.iter(|| black_box(m).det())
        });
    }
    group.finish();
}

fn inverse(c: &mut Criterion) {
    let mut group = c.benchmark_group("inverse");
    for n in [3, 6, 8] {
        let m = rational_matrix(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &m, |b, m| {
            b.iter(|| black_box(m).inverse())
        });
    }
    group.finish();
}

fn hnf(c: &mut Criterion) {
    let mut group = c.benchmark_group("hnf");
    for n in [3, 6, 10] {
        let m = integer_matrix(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &m, |b, m| {
            b.iter(|| black_box(m).hnf())
        });
    }
    group.finish();
}

fn shortest(c: &mut Criterion) {
    let mut group = c.benchmark_group("shortest_vectors");
    for n in [2, 3, 4, 5] {
        let l = lattice(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &l, |b, l| {
            b.iter(|| shortest_vectors(black_box(l)))
        });
    }
    group.finish();
}

fn isometric(c: &mut Criterion) {
    let mut group = c.benchmark_group("isometric_mod_rotation");
    for n in [2, 3, 4] {
        let pair = isometric_pair(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &pair, |b, (l1, l2)| {
            b.iter(|| isometric_mod_rotation(black_box(l1), black_box(l2), false))
        });
    }
    group.finish();
}

criterion_group!(benches, det, inverse, hnf, shortest, isometric);
criterion_main!(benches);
