//! Throughput of the exhaustive kernels. The benchmark ids carry the
//! compiled execution mode, so comparing `cargo bench` against
//! `cargo bench --no-default-features` shows the data-parallel speedup:
//!
//! ```text
//! cargo bench -p codense-core                          # parallel
//! cargo bench -p codense-core --no-default-features    # sequential
//! ```

use codense_core::bkshadow::builtins;
use codense_core::budget::Budget;
use codense_core::fincat::concrete::{finset_object, finset_window};
use codense_core::kan;
use codense_core::monadkit::{self, monad::skeletal_window};
use codense_core::par::MODE;
use codense_core::set::LSet;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn bench_codensity(c: &mut Criterion) {
    let budget = Budget::default();
    let ambient = finset_window(4);
    let d = [1, 2, 4].map(finset_object).to_vec();
    let three = finset_object(3);
    let mut group = c.benchmark_group("codensity_families");
    group.sample_size(20);
    group.bench_function(BenchmarkId::new("selection_1_2_4_at_3", MODE), |b| {
        b.iter(|| kan::codensity_value(&ambient, &d, &three, &budget).unwrap())
    });
    group.finish();
}

fn bench_algebra_search(c: &mut Criterion) {
    let budget = Budget::default();
    let affine = builtins::affine_z2();
    let x = LSet::skeletal(4);
    let mut group = c.benchmark_group("algebra_search");
    group.sample_size(20);
    group.bench_function(BenchmarkId::new("affine_z2_size_4", MODE), |b| {
        b.iter(|| monadkit::algebra_search(&affine, &x, &budget).unwrap())
    });
    group.finish();
}

fn bench_law_check(c: &mut Criterion) {
    let budget = Budget::default();
    let m = builtins::powerset();
    let window = skeletal_window(3);
    let mut group = c.benchmark_group("monad_laws");
    group.sample_size(10);
    group.bench_function(BenchmarkId::new("powerset_sizes_0_3", MODE), |b| {
        b.iter(|| monadkit::monad_law_check(&m, &window, &budget).unwrap())
    });
    group.finish();
}

criterion_group!(
    benches,
    bench_codensity,
    bench_algebra_search,
    bench_law_check
);
criterion_main!(benches);
