use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use seqforge_core::digitpow::{count_klm_with, KlmParams};
use seqforge_core::practical::{goldbach_exhaustive, practical_sieve_with};
use seqforge_core::Exec;

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn sieve(c: &mut Criterion) {
    let mut group = c.benchmark_group("practical_sieve");
    group.sample_size(10);
    for limit in [1_000_000u64, 4_000_000] {
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, limit), &limit, |b, &limit| {
                b.iter(|| practical_sieve_with(limit, exec).unwrap())
            });
        }
    }
    group.finish();
}

fn goldbach(c: &mut Criterion) {
    let table = practical_sieve_with(1_000_000, Exec::Parallel).unwrap();
    let mut group = c.benchmark_group("goldbach_exhaustive");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(name, |b| b.iter(|| goldbach_exhaustive(&table, 1_000_000, exec).unwrap()));
    }
    group.finish();
}

fn klm(c: &mut Criterion) {
    let mut group = c.benchmark_group("klm_count");
    group.sample_size(10);
    let checkpoints = [10_000u64, 100_000, 1_000_000];
    for (label, params) in [
        ("2-1-2", KlmParams::new(2, 1, 2).unwrap()),
        ("10-1-3", KlmParams::new(10, 1, 3).unwrap()),
    ] {
        for (name, exec) in MODES {
            group.bench_function(BenchmarkId::new(name, label), |b| {
                b.iter(|| count_klm_with(&checkpoints, params, exec).unwrap())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, sieve, goldbach, klm);
criterion_main!(benches);
