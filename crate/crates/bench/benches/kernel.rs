use criterion::{black_box, criterion_group, criterion_main, Criterion};

use derham_bench::{cubic_triple, form, form_pair};
use derham_core::dynamics::nambu_bracket;
use derham_core::parse::parse_form;
use derham_core::partitions::build_dag;
use derham_core::poincare::homotopy;

fn bench_wedge(c: &mut Criterion) {
    let (alpha, beta) = form_pair(6, 2, 2);
    c.bench_function("wedge 2-forms n=6", |b| {
        b.iter(|| black_box(&alpha).wedge(black_box(&beta)))
    });
}

fn bench_exterior_derivative(c: &mut Criterion) {
    let omega = form(6, 3);
    c.bench_function("d of 3-form n=6", |b| b.iter(|| black_box(&omega).d()));
}

fn bench_homotopy(c: &mut Criterion) {
    let omega = form(5, 3);
    c.bench_function("homotopy of 3-form n=5", |b| {
        b.iter(|| homotopy(black_box(&omega)).unwrap())
    });
}

fn bench_nambu(c: &mut Criterion) {
    let (h, f, g) = cubic_triple();
    c.bench_function("nambu bracket cubic", |b| {
        b.iter(|| nambu_bracket(black_box(&h), black_box(&f), black_box(&g)).unwrap())
    });
}

fn bench_partitions(c: &mut Criterion) {
    c.bench_function("partition dag k=20", |b| b.iter(|| build_dag(black_box(20))));
}

fn bench_parse(c: &mut Criterion) {
    let text = form(4, 2).to_string();
    c.bench_function("parse printed 2-form n=4", |b| {
        b.iter(|| parse_form(black_box(&text), 4).unwrap())
    });
}

criterion_group!(
    benches,
    bench_wedge,
    bench_exterior_derivative,
    bench_homotopy,
    bench_nambu,
    bench_partitions,
    bench_parse
);
criterion_main!(benches);
