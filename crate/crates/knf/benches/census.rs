//! Parallel vs sequential census throughput on a few desk-scale fields.
//!
//! Build with default features for the rayon path; `--no-default-features`
//! makes both entry points sequential, which is the baseline to compare.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use knf::theorems::{census, census_serial};
use knf::Config;

fn bench_census(c: &mut Criterion) {
    let cfg = Config::default();
    let cases = [
        ("F_2^10", knf::tower(2, 1, 10, 0).unwrap()),
        ("F_3^6", knf::tower(3, 1, 6, 0).unwrap()),
        ("F_4^5", knf::tower(2, 2, 5, 0).unwrap()),
    ];
    let mut group = c.benchmark_group("census");
    group.sample_size(10);
    for (name, field) in &cases {
        group.bench_with_input(BenchmarkId::new("parallel", name), field, |b, f| {
            b.iter(|| census(f, &cfg).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("serial", name), field, |b, f| {
            b.iter(|| census_serial(f, &cfg).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, bench_census);
criterion_main!(benches);
