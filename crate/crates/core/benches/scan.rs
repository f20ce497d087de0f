//! Compares the sequential and rayon-parallel scan paths, plus the cost
//! of a single Cartier-matrix kernel computation at a few sizes.

use std::sync::Arc;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use cartier_core::cartier::a_number;
use cartier_core::curve::CurveParams;
use cartier_core::field::Fq;
use cartier_core::scan::{run_trials_parallel, run_trials_serial};

fn bench_scan_trials(c: &mut Criterion) {
    let field = Arc::new(Fq::new(7, 2, 0).unwrap());
    let mut group = c.benchmark_group("scan_trials");
    group.sample_size(10);
    for &d in &[10u64, 20] {
        group.bench_with_input(BenchmarkId::new("serial", d), &d, |b, &d| {
            b.iter(|| run_trials_serial(&field, d, 16, 42).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("parallel", d), &d, |b, &d| {
            b.iter(|| run_trials_parallel(&field, d, 16, 42).unwrap())
        });
    }
    group.finish();
}

fn bench_a_number(c: &mut Criterion) {
    let mut group = c.benchmark_group("a_number");
    group.sample_size(10);
    for &(p, d, m) in &[(7u64, 20u64, 2usize), (11, 40, 3)] {
        let field = Arc::new(Fq::new(p, m, 0).unwrap());
        let mut rng = cartier_core::scan::trial_rng(1, d, 0);
        let curve = CurveParams::random(&field, d, &mut rng).unwrap();
        group.bench_function(
            BenchmarkId::from_parameter(format!("p{p}_d{d}_m{m}")),
            |b| b.iter(|| a_number(&curve)),
        );
    }
    group.finish();
}

criterion_group!(benches, bench_scan_trials, bench_a_number);
criterion_main!(benches);
