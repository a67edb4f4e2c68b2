use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use maxchain_bench::{ladder, layered};
use maxchain_core::analysis::{heights, longest_chain, strongly_maximal_chain};

fn finite(c: &mut Criterion) {
    let mut group = c.benchmark_group("heights");
    for layers in [8, 32, 64] {
        let p = layered(layers, 4);
        group.bench_with_input(BenchmarkId::from_parameter(p.len()), &p, |b, p| b.iter(|| heights(black_box(p))));
    }
    group.finish();

    let l = ladder(6);
    c.bench_function("longest_chain/ladder6", |b| b.iter(|| longest_chain(black_box(l.poset()))));
    c.bench_function("strongly_maximal_chain/ladder6", |b| {
        b.iter(|| strongly_maximal_chain(black_box(l.poset())))
    });
}

criterion_group!(benches, finite);
criterion_main!(benches);
