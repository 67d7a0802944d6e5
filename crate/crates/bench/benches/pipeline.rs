use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use cob2_bench::{crosscaps, handlebody};
use cob2_core::frobalg::{examples, find_theta, seeded_algebra};
use cob2_core::{normalize, parse, Involution, Tqft};

fn normal_forms(c: &mut Criterion) {
    let mut group = c.benchmark_group("normalize");
    for g in [4, 16, 64] {
        let t = handlebody(g, 3);
        group.bench_with_input(BenchmarkId::new("handlebody", g), &t, |b, t| {
            b.iter(|| normalize(black_box(t)))
        });
    }
    for k in [4, 16, 64] {
        let t = crosscaps(k);
        group.bench_with_input(BenchmarkId::new("crosscaps", k), &t, |b, t| {
            b.iter(|| normalize(black_box(t)))
        });
    }
    group.finish();
}

fn parsing(c: &mut Criterion) {
    let text = handlebody(32, 4).render();
    c.bench_function("parse/handlebody 32", |b| {
        b.iter(|| parse(black_box(&text)))
    });
}

fn evaluation(c: &mut Criterion) {
    let mut group = c.benchmark_group("evaluate");
    let cp1 = Tqft::new(&examples::cp1(), &Involution::identity(2), None).unwrap();
    for g in [1, 4, 8] {
        let t = handlebody(g, 2);
        group.bench_with_input(BenchmarkId::new("cp1 handlebody", g), &t, |b, t| {
            b.iter(|| cp1.evaluate(black_box(t)))
        });
    }
    let (a, phi) = seeded_algebra(3);
    let theta = match find_theta(&a, &phi) {
        cob2_core::ThetaSearch::Found(t) => t,
        other => panic!("seeded algebra without theta: {other}"),
    };
    let q = Tqft::new(&a, &phi, Some(&theta)).unwrap();
    let t = crosscaps(8);
    group.bench_function("dim 4 crosscaps 8", |b| {
        b.iter(|| q.evaluate(black_box(&t)))
    });
    group.finish();
}

fn theta_search(c: &mut Criterion) {
    let a = examples::cp1();
    let phi = Involution::identity(2);
    c.bench_function("find_theta/cp1", |b| {
        b.iter(|| find_theta(black_box(&a), &phi))
    });
}

criterion_group!(benches, normal_forms, parsing, evaluation, theta_search);
criterion_main!(benches);
