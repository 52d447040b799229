use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use posetsym_core::group::{generate_group, verify_relations, GroupConfig};
use posetsym_core::measure::{estimate_frequency, sample_plancherel, sample_rsk_thoma, Alpha, CentralMeasureSpec};
use posetsym_core::{build_graph, build_young_poset, enumerate_numberings, IdealSpec};
use posetsym_bench::windows;

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_numberings");
    for (name, w) in windows() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &w, |b, w| {
            b.iter(|| enumerate_numberings(black_box(w), w.poset.len()).unwrap().len())
        });
    }
    group.finish();
}

fn graph(c: &mut Criterion) {
    let mut group = c.benchmark_group("build_graph");
    for (name, w) in windows() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &w, |b, w| {
            b.iter(|| build_graph(black_box(w), w.depth()).unwrap().depth())
        });
    }
    let young = build_young_poset(&[1]).unwrap();
    group.bench_function("young-staircase-13", |b| {
        b.iter(|| build_graph(black_box(&young), 13).unwrap().depth())
    });
    group.finish();
}

fn groups(c: &mut Criterion) {
    let mut group = c.benchmark_group("generate_group");
    group.sample_size(10);
    let config = GroupConfig {
        cap: 100_000,
        ..GroupConfig::default()
    };
    for (name, w) in windows().into_iter().take(3) {
        group.bench_with_input(BenchmarkId::from_parameter(name), &w, |b, w| {
            b.iter(|| {
                let h = generate_group(black_box(w), w.poset.len(), config).unwrap();
                verify_relations(&h).all_hold()
            })
        });
    }
    group.finish();
}

fn sampling(c: &mut Criterion) {
    let mut group = c.benchmark_group("sampling");
    group.sample_size(20);
    let alpha: Alpha = "0.7,0.3".parse().unwrap();
    group.bench_function("plancherel-2500", |b| b.iter(|| sample_plancherel(2500, black_box(7)).len()));
    group.bench_function("rsk-5000", |b| b.iter(|| sample_rsk_thoma(&alpha, 5000, black_box(7)).len()));
    group.bench_function("plancherel-freq-2500x20", |b| {
        let ideal = IdealSpec::HookZ2 { rows: 1, cols: 0 };
        b.iter(|| estimate_frequency(&CentralMeasureSpec::PlancherelYoung, &ideal, 2500, 20, 7).unwrap().estimate)
    });
    group.finish();
}

criterion_group!(benches, enumeration, graph, groups, sampling);
criterion_main!(benches);
