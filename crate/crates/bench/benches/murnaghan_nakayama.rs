use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use nsymkit_core::nsym::{d_matrix_cached, mn, MnMethod};
use nsymkit_core::skew::enumerate_p;
use nsymkit_core::tableaux::d_matrix;
use nsymkit_core::Composition;
use std::hint::black_box;

fn evaluators(c: &mut Criterion) {
    let alpha = Composition::from_parts(&[2, 1, 3]);
    // warm the conversion caches so the ribbon route measures arithmetic
    for degree in 0..=10 {
        d_matrix_cached(degree);
    }
    let mut group = c.benchmark_group("psi4_times_s213");
    for method in MnMethod::ALL {
        group.bench_with_input(BenchmarkId::from_parameter(method), &method, |b, &m| {
            b.iter(|| mn(m, black_box(4), black_box(&alpha)).unwrap())
        });
    }
    group.finish();
}

fn strips(c: &mut Criterion) {
    let alpha = Composition::from_parts(&[2, 1, 3, 1, 2]);
    c.bench_function("enumerate_p (2,1,3,1,2) n=5", |b| b.iter(|| enumerate_p(black_box(&alpha), 5).unwrap()));
}

fn descents(c: &mut Criterion) {
    let mut group = c.benchmark_group("d_matrix");
    group.sample_size(10);
    for n in [6, 8, 10] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| b.iter(|| d_matrix(black_box(n))));
    }
    group.finish();
}

criterion_group!(benches, evaluators, strips, descents);
criterion_main!(benches);
