//! Benchmarks the quadruple search: rayon fan-out over `(m, N)` cells
//! versus the forced-sequential path, at two sizes, plus the single-cell
//! enumeration kernel.
//!
//! Run with `cargo bench -p pqsurf`. Build with
//! `--no-default-features` to measure the build without rayon linked in
//! (the `parallel` arm then just runs the sequential code).

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use pqsurf::search::{enumerate_a, enumerate_b, enumerate_quadruples, enumerate_quadruples_sequential};
use pqsurf::SearchBounds;

fn bench_search(c: &mut Criterion) {
    let small = SearchBounds {
        m_min: 3,
        m_max: 10,
        n_min: 4,
        n_max: 8,
    };
    let full = SearchBounds::default();

    let mut group = c.benchmark_group("search");
    group.sample_size(10);
    for (name, bounds) in [("m<=10,N<=8", small), ("m<=22,N<=12", full)] {
        group.bench_with_input(
            BenchmarkId::new("parallel", name),
            &bounds,
            |bench, bounds| bench.iter(|| enumerate_quadruples(bounds).unwrap()),
        );
        group.bench_with_input(
            BenchmarkId::new("sequential", name),
            &bounds,
            |bench, bounds| {
                bench.iter(|| enumerate_quadruples_sequential(bounds).unwrap())
            },
        );
    }
    group.finish();
}

fn bench_cell(c: &mut Criterion) {
    c.bench_function("enumerate_cell m=14 N=6", |bench| {
        bench.iter(|| {
            let mut count = 0usize;
            for a in enumerate_a(14, 6).unwrap() {
                count += enumerate_b(14, &a).unwrap().len();
            }
            count
        })
    });
}

criterion_group!(benches, bench_search, bench_cell);
criterion_main!(benches);
