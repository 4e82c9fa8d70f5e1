//! Hot paths: canonical forms, the census, the pebble game, factorization
//! and the full K(3,3) pipeline.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use laman_core::algebra::{
    eliminate_to_x3, factor_over_q, k33_default_distances, k33_system, run_k33, square_eliminate_y,
};
use laman_core::canonical_form;
use laman_core::graph::families;
use laman_core::rigidity::{enumerate_laman, is_independent, is_laman};

fn canonical(c: &mut Criterion) {
    let k33 = families::k33();
    let prism = families::prism();
    c.bench_function("canonical_form/k33", |b| b.iter(|| canonical_form(black_box(&k33)).unwrap()));
    c.bench_function("canonical_form/prism", |b| b.iter(|| canonical_form(black_box(&prism)).unwrap()));
}

fn census(c: &mut Criterion) {
    let mut group = c.benchmark_group("census");
    group.sample_size(10);
    for n in [6, 7] {
        group.bench_function(format!("laman/{n}"), |b| b.iter(|| enumerate_laman(black_box(n)).unwrap()));
    }
    group.finish();
}

fn pebble(c: &mut Criterion) {
    let graphs = enumerate_laman(8).unwrap().laman_graphs();
    c.bench_function("pebble_game/all_laman_8", |b| {
        b.iter(|| graphs.iter().filter(|g| is_independent(black_box(g))).count())
    });
    c.bench_function("is_laman/complete_12", |b| {
        let k = families::complete(12);
        b.iter(|| is_laman(black_box(&k)))
    });
}

fn algebra(c: &mut Criterion) {
    let d = k33_default_distances();
    let quartics = square_eliminate_y(&k33_system(&d).unwrap()).unwrap();
    let eliminant = eliminate_to_x3(&quartics).unwrap().polynomial;

    let mut group = c.benchmark_group("k33");
    group.sample_size(10);
    group.bench_function("eliminate", |b| b.iter(|| eliminate_to_x3(black_box(&quartics)).unwrap()));
    group.bench_function("factor_eliminant", |b| {
        b.iter_batched(|| eliminant.clone(), |p| factor_over_q(&p).unwrap(), BatchSize::SmallInput)
    });
    group.bench_function("pipeline", |b| b.iter(|| run_k33(black_box(&d), 10_000).unwrap()));
    group.finish();
}

criterion_group!(benches, canonical, census, pebble, algebra);
criterion_main!(benches);
