//! Compares the data-parallel paths against a single worker thread.
//!
//! With the `parallel` feature the same workloads run once inside a
//! one-thread rayon pool and once on the global pool. Without it only the
//! sequential fallback is measured.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use rsinv::algebra::AlgebraKind;
use rsinv::generation::module_generator_report;
use rsinv::invariants::group::standard;
use rsinv::invariants::{delta_constants, fixed_space, molien_series, WeitzenbockDerivation};
use rsinv::schur::glmodule_series_l;

struct Workload {
    name: &'static str,
    run: Box<dyn Fn() + Send + Sync>,
}

fn workloads() -> Vec<Workload> {
    vec![
        Workload {
            name: "molien_L_S3_N12",
            run: Box::new(|| {
                let g = standard::symmetric(3);
                black_box(molien_series(&glmodule_series_l(3, 12), &g).unwrap());
            }),
        },
        Workload {
            name: "fixed_space_L_S3_n7",
            run: Box::new(|| {
                let g = standard::symmetric(3);
                black_box(fixed_space(&g, AlgebraKind::L, 7).unwrap());
            }),
        },
        Workload {
            name: "modgen_swap_N10",
            run: Box::new(|| {
                black_box(module_generator_report(&standard::swap(), 10).unwrap());
            }),
        },
        Workload {
            name: "constants_L_2_2_n5",
            run: Box::new(|| {
                let delta = WeitzenbockDerivation::from_blocks(&[2, 2]).unwrap();
                black_box(delta_constants(&delta, AlgebraKind::L, 5).unwrap());
            }),
        },
    ]
}

#[cfg(feature = "parallel")]
fn compare(c: &mut Criterion) {
    let single = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let threads = rayon::current_num_threads();
    for w in workloads() {
        let mut group = c.benchmark_group(w.name);
        group.sample_size(10);
        group.bench_function(criterion::BenchmarkId::new("single_thread", 1), |b| {
            b.iter(|| single.install(|| (w.run)()))
        });
        group.bench_function(criterion::BenchmarkId::new("global_pool", threads), |b| b.iter(|| (w.run)()));
        group.finish();
    }
}

#[cfg(not(feature = "parallel"))]
fn compare(c: &mut Criterion) {
    for w in workloads() {
        let mut group = c.benchmark_group(w.name);
        group.sample_size(10);
        group.bench_function("sequential", |b| b.iter(|| (w.run)()));
        group.finish();
    }
}

criterion_group!(benches, compare);
criterion_main!(benches);
