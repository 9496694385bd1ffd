//! Benchmarks for exhaustive graph enumeration and canonical forms.

use criterion::{criterion_group, criterion_main, Criterion};
use dspectra::{all_connected_graphs, all_trees, canonical_form, families};
use std::hint::black_box;

fn bench_enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate");
    group.sample_size(20);
    group.bench_function("connected_n6", |b| {
        b.iter(|| all_connected_graphs(black_box(6)).unwrap())
    });
    group.bench_function("connected_n7", |b| {
        b.iter(|| all_connected_graphs(black_box(7)).unwrap())
    });
    group.bench_function("trees_n9", |b| b.iter(|| all_trees(black_box(9)).unwrap()));
    group.finish();
}

fn bench_canonical_form(c: &mut Criterion) {
    let mut group = c.benchmark_group("canonical_form");
    let path = families::path(8).unwrap();
    let party = families::cocktail_party(4).unwrap();
    group.bench_function("path_n8", |b| b.iter(|| canonical_form(black_box(&path))));
    group.bench_function("cocktail_party_n8", |b| {
        b.iter(|| canonical_form(black_box(&party)))
    });
    group.finish();
}

criterion_group!(benches, bench_enumeration, bench_canonical_form);
criterion_main!(benches);
