use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use tiling_bench::{convex, recursive, two_scale};
use tiling_core::geometry::{length_sum_compare, LengthExpr};
use tiling_core::rational::int;
use tiling_core::stretch::{decompose_stretches, label_sides, w_audit};
use tiling_core::{build_incidence, validate_patch};

fn incidence(c: &mut Criterion) {
    let mut g = c.benchmark_group("incidence");
    for depth in [10, 50, 200] {
        let p = recursive(depth);
        g.bench_with_input(BenchmarkId::new("recursive", p.len()), &p, |b, p| b.iter(|| build_incidence(p).unwrap()));
    }
    for cells in [4, 10] {
        let p = two_scale(cells);
        g.bench_with_input(BenchmarkId::new("two_scale", p.len()), &p, |b, p| b.iter(|| build_incidence(p).unwrap()));
    }
    g.finish();
}

fn validation(c: &mut Criterion) {
    let mut g = c.benchmark_group("validate");
    for p in [recursive(50), two_scale(10), convex(12)] {
        let name = p.meta("generator").unwrap_or("patch").to_string();
        g.bench_with_input(BenchmarkId::new(name, p.len()), &p, |b, p| b.iter(|| validate_patch(p)));
    }
    g.finish();
}

fn full_audit(c: &mut Criterion) {
    let mut g = c.benchmark_group("audit");
    g.sample_size(10);
    for depth in [10, 200] {
        let p = recursive(depth);
        g.bench_with_input(BenchmarkId::new("recursive", p.len()), &p, |b, p| {
            b.iter(|| {
                let gr = build_incidence(p).unwrap();
                let st = decompose_stretches(&gr);
                let labels = label_sides(&gr, &st);
                w_audit(&gr, p, &st, &labels, false)
            })
        });
    }
    g.finish();
}

fn length_compare(c: &mut Criterion) {
    let a = LengthExpr::from_terms((1..40).map(|n| (int(1), int(n))));
    let b = LengthExpr::from_terms((2..41).map(|n| (int(1), int(n))));
    let near = &a + &LengthExpr::from_terms([(int(1), int(2)), (int(-1), int(3)), (int(1), int(5)), (int(-1), int(7))]);
    c.bench_function("length_compare/distinct", |bn| bn.iter(|| length_sum_compare(black_box(&a), black_box(&b))));
    c.bench_function("length_compare/close", |bn| bn.iter(|| length_sum_compare(black_box(&a), black_box(&near))));
}

criterion_group!(benches, incidence, validation, full_audit, length_compare);
criterion_main!(benches);
