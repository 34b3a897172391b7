use criterion::{black_box, criterion_group, criterion_main, Criterion};

use dyer_core::oracle::{abelianize_snf, build_presentation, derived_subgroup, finite_group_table, todd_coxeter};
use dyer_core::{DyerGraph, GraphBuilder};

fn triangle(ab: u64, bc: u64, ac: u64) -> DyerGraph {
    GraphBuilder::new()
        .vertex("a", 2)
        .vertex("b", 2)
        .vertex("c", 2)
        .edge("a", "b", ab)
        .edge("b", "c", bc)
        .edge("a", "c", ac)
        .build()
        .unwrap()
}

/// Free product of four cyclic groups of order 4: index-256 derived subgroup.
fn free_product() -> DyerGraph {
    GraphBuilder::new().vertex("a", 4).vertex("b", 4).vertex("c", 4).vertex("d", 4).build().unwrap()
}

fn oracle(c: &mut Criterion) {
    let h3 = build_presentation(&triangle(5, 3, 2));
    c.bench_function("todd_coxeter H3", |b| b.iter(|| todd_coxeter(black_box(&h3), 1_000_000).unwrap()));
    let table = todd_coxeter(&h3, 1_000_000).unwrap();
    c.bench_function("derived series H3", |b| {
        b.iter(|| finite_group_table(black_box(&table)).unwrap().derived_series())
    });
    let p = build_presentation(&free_product());
    c.bench_function("derived subgroup Z4*Z4*Z4*Z4", |b| b.iter(|| derived_subgroup(black_box(&p)).unwrap()));
    let rs = derived_subgroup(&p).unwrap().presentation;
    c.bench_function("smith normal form of rewritten presentation", |b| b.iter(|| abelianize_snf(black_box(&rs))));
}

criterion_group!(benches, oracle);
criterion_main!(benches);
