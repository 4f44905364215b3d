use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use patcount::{count, list_copies, Pattern, Precision};
use patcount_bench::input;
use std::hint::black_box;
use std::time::Duration;

fn count4(c: &mut Criterion) {
    let mut g = c.benchmark_group("count4");
    g.sample_size(10);
    let eps = Precision::approx(0.1).unwrap();
    for s in ["1324", "2413", "1234"] {
        let s: Pattern = s.parse().unwrap();
        for n in [1 << 10, 1 << 12] {
            let p = input(n);
            g.bench_with_input(BenchmarkId::new(s.to_string(), n), &p, |b, p| {
                b.iter(|| count(black_box(p), &s, eps).unwrap())
            });
        }
    }
    g.finish();
}

fn count5(c: &mut Criterion) {
    let mut g = c.benchmark_group("count5");
    g.sample_size(10).measurement_time(Duration::from_secs(10));
    let eps = Precision::approx(0.1).unwrap();
    for s in ["24135", "13524", "12345"] {
        let s: Pattern = s.parse().unwrap();
        for n in [1 << 9, 1 << 10] {
            let p = input(n);
            g.bench_with_input(BenchmarkId::new(s.to_string(), n), &p, |b, p| {
                b.iter(|| count(black_box(p), &s, eps).unwrap())
            });
        }
    }
    g.finish();
}

fn listing(c: &mut Criterion) {
    let mut g = c.benchmark_group("list_copies");
    g.sample_size(10);
    let p = input(1 << 12);
    for s in ["2413", "24135"] {
        let s: Pattern = s.parse().unwrap();
        g.bench_function(BenchmarkId::new(s.to_string(), 1000), |b| {
            b.iter(|| list_copies(black_box(&p), &s, Some(1000)).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, count4, count5, listing);
criterion_main!(benches);
