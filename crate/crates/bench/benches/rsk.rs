use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use schurweyl_core::ergodic::{sample_word, tail_estimate, youngize, BernoulliSpec};
use schurweyl_core::graph::build;
use schurweyl_core::rsk::{rsk, rsk_mixed};
use schurweyl_core::young::{dim_hook, dim_ratio_shapes};
use schurweyl_core::YoungDiagram;
use std::hint::black_box;

fn insertion(c: &mut Criterion) {
    let pure = BernoulliSpec::from_floats(&[0.5, 0.3, 0.2], &[], 1).unwrap();
    let mixed = BernoulliSpec::from_floats(&[0.4, 0.2], &[0.3, 0.1], 1).unwrap();
    let mut g = c.benchmark_group("insertion");
    for n in [1_000, 10_000] {
        let w = sample_word(&pure, n);
        g.bench_with_input(BenchmarkId::new("rsk", n), &w, |b, w| {
            b.iter(|| rsk(black_box(w)).unwrap())
        });
        let m = sample_word(&mixed, n);
        g.bench_with_input(BenchmarkId::new("rsk_mixed", n), &m, |b, m| {
            b.iter(|| rsk_mixed(black_box(m)))
        });
    }
    for n in [10_000, 100_000] {
        let w = sample_word(&pure, n);
        g.bench_with_input(BenchmarkId::new("youngize", n), &w, |b, w| {
            b.iter(|| youngize(black_box(w), None))
        });
        let m = sample_word(&mixed, n);
        g.bench_with_input(BenchmarkId::new("youngize_mixed", n), &m, |b, m| {
            b.iter(|| youngize(black_box(m), None))
        });
    }
    g.finish();
}

fn estimates(c: &mut Criterion) {
    let spec = BernoulliSpec::from_floats(&[0.7, 0.3], &[], 1).unwrap();
    let w = sample_word(&spec, 10_000);
    let mut g = c.benchmark_group("tail_estimate");
    for m in [1, 2, 3] {
        g.bench_with_input(BenchmarkId::from_parameter(m), &m, |b, &m| {
            b.iter(|| tail_estimate(black_box(&w), 10_000, m).unwrap())
        });
    }
    g.finish();
}

fn combinatorics(c: &mut Criterion) {
    let big = YoungDiagram::new(vec![4000, 3000, 2000, 1000]).unwrap();
    let inner = YoungDiagram::new(vec![3998, 2999, 2000, 1000]).unwrap();
    c.bench_function("dim_ratio_shapes/10000", |b| {
        b.iter(|| dim_ratio_shapes(black_box(&big), black_box(&inner)).unwrap())
    });
    let mid = YoungDiagram::new(vec![40, 30, 20, 10]).unwrap();
    c.bench_function("dim_hook/100", |b| b.iter(|| dim_hook(black_box(&mid))));
    c.bench_function("graph/k2_depth10", |b| b.iter(|| build(2, 0, 10).unwrap()));
}

criterion_group!(benches, insertion, estimates, combinatorics);
criterion_main!(benches);
