use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use maxchain_bench::{linear, ordinal};
use maxchain_core::{phi1, phi_alpha, BitSource};

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("linear_prefix");
    for ty in ["w", "w^2", "w^w"] {
        let host = linear(ty);
        group.bench_with_input(BenchmarkId::from_parameter(ty), &host, |b, h| {
            b.iter(|| h.prefix(black_box(1000), usize::MAX))
        });
    }
    group.finish();
}

fn operators(c: &mut Criterion) {
    let w = linear("w");
    c.bench_function("phi1/linear_w/200", |b| b.iter(|| phi1(&w, 10_000).enumerate(black_box(200))));

    let host = linear("w^2");
    let two = ordinal("2");
    let mut group = c.benchmark_group("phi2/linear_w2");
    group.sample_size(20);
    for fuel in [1_000, 10_000] {
        group.bench_with_input(BenchmarkId::from_parameter(fuel), &fuel, |b, &fuel| {
            b.iter(|| {
                phi_alpha(&host, &two, &BitSource::seeded(black_box(3)), fuel)
                    .unwrap()
                    .enumerate(50)
            })
        });
    }
    group.finish();
}

criterion_group!(benches, enumeration, operators);
criterion_main!(benches);
