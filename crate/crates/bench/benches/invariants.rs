use braidknot::{
    alexander_poly, formal_semigroup, homfly, paper_base_link, twist_alexander, verify_family,
    Family, ReportOptions,
};
use braidknot_bench::kn_words;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

fn alexander(c: &mut Criterion) {
    let mut group = c.benchmark_group("alexander");
    for (n, w) in kn_words(&[0, 2, 4, 8]) {
        group.bench_with_input(BenchmarkId::new("burau", n), &w, |b, w| {
            b.iter(|| alexander_poly(black_box(w)))
        });
    }
    let base = paper_base_link();
    for n in [2, 8, 32] {
        group.bench_with_input(BenchmarkId::new("torres", n), &n, |b, &n| {
            b.iter(|| twist_alexander(black_box(&base), n))
        });
    }
    group.finish();
}

fn semigroup(c: &mut Criterion) {
    let d = alexander_poly(&kn_words(&[8])[0].1).unwrap();
    c.bench_function("formal_semigroup/kn8", |b| {
        b.iter(|| formal_semigroup(black_box(&d)))
    });
}

fn hecke(c: &mut Criterion) {
    let mut group = c.benchmark_group("homfly");
    group.sample_size(10);
    for (n, w) in kn_words(&[0, 2, 8]) {
        group.bench_with_input(BenchmarkId::new("kn", n), &w, |b, w| {
            b.iter(|| homfly(black_box(w)))
        });
    }
    group.finish();
}

fn sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_family");
    group.sample_size(10);
    group.bench_function("kn_0_8", |b| {
        b.iter(|| verify_family(Family::Kn, 0, 8, ReportOptions::default()))
    });
    group.bench_function("kn_0_8_homfly", |b| {
        b.iter(|| verify_family(Family::Kn, 0, 8, ReportOptions { homfly: true }))
    });
    group.finish();
}

criterion_group!(benches, alexander, semigroup, hecke, sweep);
criterion_main!(benches);
