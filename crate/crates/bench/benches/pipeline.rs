//! End-to-end timings: construction, verification and augmentation.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use epg_bench::{build_closed, load_fixture};
use epg_core::{
    double_wheel, represent_planar_no_sep_triangle, verify_representation, BuildOptions,
};

fn construction(c: &mut Criterion) {
    let mut group = c.benchmark_group("build_closed");
    for name in ["octahedron.g", "icosahedron.g"] {
        let g = load_fixture(name).graph;
        group.bench_function(name.trim_end_matches(".g"), |b| {
            b.iter(|| build_closed(black_box(&g)))
        });
    }
    let dw = double_wheel(16).unwrap();
    group.bench_function("double_wheel_16", |b| b.iter(|| build_closed(black_box(&dw))));
    group.finish();
}

fn verification(c: &mut Criterion) {
    let g = load_fixture("icosahedron.g").graph;
    let rep = build_closed(&g);
    c.bench_function("verify/icosahedron", |b| {
        b.iter(|| verify_representation(black_box(&rep), black_box(&g)))
    });
}

fn augmentation(c: &mut Criterion) {
    let cube = load_fixture("cube.g");
    c.bench_function("augment/cube", |b| {
        b.iter(|| {
            represent_planar_no_sep_triangle(
                black_box(&cube.graph),
                black_box(&cube.augmentation),
                &BuildOptions::default(),
            )
            .unwrap()
        })
    });
}

criterion_group!(benches, construction, verification, augmentation);
criterion_main!(benches);
