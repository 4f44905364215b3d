use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use patcount::birge::{approx_monotone_sum, Direction, FnAccess};
use patcount::range12::{PairKind, RangeTree2D};
use patcount::segtree::SegTree1D;
use patcount::Precision;
use patcount_bench::{input, rects};
use std::hint::black_box;

fn build(c: &mut Criterion) {
    let mut g = c.benchmark_group("build");
    g.sample_size(10);
    for n in [1 << 12, 1 << 14] {
        let p = input(n);
        g.bench_with_input(BenchmarkId::new("segtree", n), &p, |b, p| b.iter(|| SegTree1D::build(black_box(p))));
        g.bench_with_input(BenchmarkId::new("range12", n), &p, |b, p| {
            b.iter(|| RangeTree2D::build(black_box(p), PairKind::Increasing))
        });
    }
    g.finish();
}

fn queries(c: &mut Criterion) {
    let n = 1 << 14;
    let p = input(n);
    let qs = rects(n, 256);
    let seg = SegTree1D::build(&p);
    let tree = RangeTree2D::build(&p, PairKind::Increasing);
    let eps = Precision::approx(0.1).unwrap();
    c.bench_function("segtree count x256", |b| b.iter(|| qs.iter().map(|r| seg.count(black_box(r))).sum::<usize>()));
    c.bench_function("range12 approx x256", |b| {
        b.iter(|| qs.iter().map(|r| patcount::range12::approx_12_in_rect(&tree, black_box(r), eps)).sum::<f64>())
    });
}

fn birge(c: &mut Criterion) {
    let n = 1 << 20;
    c.bench_function("birge sum 2^20", |b| {
        b.iter(|| {
            let mut acc = FnAccess { len: n, dir: Direction::NonIncreasing, probe: |i: usize| (n - i) as f64 };
            approx_monotone_sum(black_box(&mut acc), Precision::Approx(0.1))
        })
    });
}

criterion_group!(benches, build, queries, birge);
criterion_main!(benches);
