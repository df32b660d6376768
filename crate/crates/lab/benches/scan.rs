use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use stanley_lab::fixtures::fixture_set;
use stanley_lab::{classify_all, scan_minimal, verify_random, PredicateSpec, ScanConfig};

fn configs() -> Vec<(&'static str, ScanConfig)> {
    vec![
        ("sequential", ScanConfig::sequential()),
        ("parallel", ScanConfig::default()),
    ]
}

fn classify(c: &mut Criterion) {
    let mut group = c.benchmark_group("classify kvex(2) S_1..S_8");
    group.sample_size(10);
    for (name, cfg) in configs() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &cfg, |b, cfg| {
            b.iter(|| classify_all(black_box(8), PredicateSpec::KVex(2), cfg).unwrap())
        });
    }
    group.finish();
}

fn mine(c: &mut Criterion) {
    let mut group = c.benchmark_group("minimal kvex(3) S_1..S_8");
    group.sample_size(10);
    for (name, cfg) in configs() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &cfg, |b, cfg| {
            b.iter(|| scan_minimal(black_box(8), PredicateSpec::KVex(3), cfg).unwrap())
        });
    }
    group.finish();
}

fn sample(c: &mut Criterion) {
    let set = fixture_set(PredicateSpec::KVex(3)).unwrap().unwrap();
    let mut group = c.benchmark_group("random kvex(3) S_10..S_11, 20000 samples");
    group.sample_size(10);
    for (name, cfg) in configs() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &cfg, |b, cfg| {
            b.iter(|| verify_random(PredicateSpec::KVex(3), &set, 10..=11, 20_000, 1, cfg).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, classify, mine, sample);
criterion_main!(benches);
