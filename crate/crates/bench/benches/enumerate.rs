use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use lz76::{enumerate_counts_with, DistributionReport, EnumerationConfig};
use std::hint::black_box;
use std::time::Duration;

fn bench_enumerate(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate_counts");
    g.measurement_time(Duration::from_secs(10));
    for workers in [1, 4, 8] {
        let config = EnumerationConfig::default().with_workers(workers);
        g.throughput(Throughput::Elements(1 << 16));
        g.bench_with_input(
            BenchmarkId::new("binary_n16", workers),
            &config,
            |b, cfg| b.iter(|| enumerate_counts_with(2, black_box(16), cfg).unwrap()),
        );
    }
    g.finish();

    let config = EnumerationConfig::default();
    c.bench_function("report/binary_nmax12", |b| {
        b.iter(|| DistributionReport::build(2, black_box(12), &config).unwrap())
    });
}

criterion_group!(benches, bench_enumerate);
criterion_main!(benches);
