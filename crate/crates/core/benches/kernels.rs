//! Solver kernels, and one suite run on a single thread versus the full pool.
//!
//! Build with `--no-default-features` to measure the sequential fallback.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use egstab::algorithms::{circumference, clique_tally, greedy_maximal_path, posa_cycle};
use egstab::families::{build_h, build_special, SpecialTag};
use egstab::graph::{canonical_form, enumerate_two_connected, EnumerateOptions};
use egstab::verify::{self, Suite, VerifyConfig};
use std::hint::black_box;

fn kernels(c: &mut Criterion) {
    let (_, f0) = build_special(SpecialTag::F0, 12, 12, 3).unwrap();
    let h = build_h(20, 12, 4).unwrap();
    c.bench_function("circumference/F0(12,12,3)", |b| {
        b.iter(|| circumference(black_box(&f0)))
    });
    c.bench_function("clique_tally/H(20,12,4)", |b| b.iter(|| clique_tally(black_box(&h))));
    c.bench_function("canonical_form/F0(12,12,3)", |b| {
        b.iter(|| canonical_form(black_box(&f0)))
    });

    let graphs = enumerate_two_connected(7, &EnumerateOptions::default()).unwrap();
    c.bench_function("posa_cycle/2-connected n=7", |b| {
        b.iter(|| {
            for g in graphs.iter() {
                let p = greedy_maximal_path(g, 0, None);
                black_box(posa_cycle(g, &p).unwrap());
            }
        })
    });
}

fn suites(c: &mut Criterion) {
    let mut group = c.benchmark_group("suite");
    group.sample_size(10);
    let mut cfg = VerifyConfig::defaults(Suite::KopylovLuo);
    cfg.n_max = 8;
    // Warm the enumeration memo so both arms time only the checks.
    verify::run(&cfg, Some(1)).unwrap();
    let threads = std::thread::available_parallelism().map_or(1, |n| n.get());
    for (label, jobs) in [("jobs=1", Some(1)), ("pool", None)] {
        group.bench_with_input(BenchmarkId::new("kopylov_luo n<=8", label), &jobs, |b, &j| {
            b.iter(|| verify::run(&cfg, j).unwrap())
        });
    }
    eprintln!("pool size: {threads}, parallel build: {}", egstab::par::is_parallel());
    group.finish();
}

criterion_group!(benches, kernels, suites);
criterion_main!(benches);
