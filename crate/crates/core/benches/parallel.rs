//! Parallel vs single-threaded evaluation of the two main generating
//! functions. The single-thread pool stands in for the sequential build
//! (`--no-default-features`), which runs the same code path without rayon.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rayon::ThreadPoolBuilder;
use w2chi_core::pipeline::omega2_pipeline;
use w2chi_core::weight2::{omega2_closed, Weight2Config};

fn pools() -> Vec<(String, rayon::ThreadPool)> {
    // at least two workers, so the comparison exists even on one core
    let wide = rayon::current_num_threads().max(2);
    [1, wide]
        .into_iter()
        .map(|n| {
            let pool = ThreadPoolBuilder::new().num_threads(n).build().expect("thread pool");
            (format!("{n}-threads"), pool)
        })
        .collect()
}

fn bench_closed(c: &mut Criterion) {
    let cfg = Weight2Config::new(10, 5);
    let mut group = c.benchmark_group("omega2_closed_g10_n5");
    group.sample_size(10);
    for (name, pool) in pools() {
        group.bench_with_input(BenchmarkId::from_parameter(&name), &cfg, |b, cfg| {
            b.iter(|| pool.install(|| omega2_closed(cfg).expect("closed form")))
        });
    }
    group.finish();
}

fn bench_pipeline(c: &mut Criterion) {
    let cfg = Weight2Config::new(6, 4);
    let mut group = c.benchmark_group("omega2_pipeline_g6_n4");
    group.sample_size(10);
    for (name, pool) in pools() {
        group.bench_with_input(BenchmarkId::from_parameter(&name), &cfg, |b, cfg| {
            b.iter(|| pool.install(|| omega2_pipeline(cfg).expect("pipeline")))
        });
    }
    group.finish();
}

criterion_group!(benches, bench_closed, bench_pipeline);
criterion_main!(benches);
