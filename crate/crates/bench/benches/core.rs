use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use vdw_core::{hochster_betti, is_cohen_macaulay, make_vdw, FieldSpec, VdwParams};

fn vdw(n: usize, k: usize) -> vdw_core::SimplicialComplex {
    make_vdw(VdwParams::new(n, k).unwrap())
}

fn bench_hochster(c: &mut Criterion) {
    let cx = vdw(12, 3);
    c.bench_function("hochster vdW(12,3) Q", |b| {
        b.iter(|| hochster_betti(black_box(&cx), FieldSpec::Rationals).unwrap())
    });
    c.bench_function("hochster vdW(12,3) GF2", |b| {
        b.iter(|| hochster_betti(black_box(&cx), FieldSpec::GF2).unwrap())
    });
}

fn bench_nonfaces(c: &mut Criterion) {
    let cx = vdw(30, 4);
    c.bench_function("minimal non-faces vdW(30,4)", |b| {
        b.iter(|| black_box(&cx).minimal_non_faces())
    });
}

fn bench_cm(c: &mut Criterion) {
    let cx = vdw(12, 2);
    c.bench_function("cohen-macaulay vdW(12,2)", |b| {
        b.iter(|| is_cohen_macaulay(black_box(&cx), FieldSpec::Rationals))
    });
}

criterion_group!(benches, bench_hochster, bench_nonfaces, bench_cm);
criterion_main!(benches);
