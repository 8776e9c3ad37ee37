use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use stabgeom::convex2d::shapes;
use stabgeom::isometry::iso_profile;
use stabgeom::metrics::{d_bl, d_bm_affine, d_bm_linear, d_bm_to_disc};
use stabgeom::sections3d::{bodies, central_section, find_centered_section};
use stabgeom::Vec3;
use stabgeom_bench::polygon_pair;

fn distances(c: &mut Criterion) {
    let mut g = c.benchmark_group("distance");
    g.sample_size(10);
    for m in [16, 64, 256] {
        let (k, l) = polygon_pair(m);
        g.bench_with_input(BenchmarkId::new("bm_linear", m), &m, |b, _| {
            b.iter(|| d_bm_linear(black_box(&k), black_box(&l), 512).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("bm_affine", m), &m, |b, _| {
            b.iter(|| d_bm_affine(black_box(&k), black_box(&l), 512).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("bl", m), &m, |b, _| {
            b.iter(|| d_bl(black_box(&k), black_box(&l), 512).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("bm_to_disc", m), &m, |b, _| {
            b.iter(|| d_bm_to_disc(black_box(&k)).unwrap())
        });
    }
    g.finish();
}

fn profiles(c: &mut Criterion) {
    let k = shapes::regular_polygon(7, 1.0, 0.0);
    c.bench_function("iso_profile/2048", |b| {
        b.iter(|| iso_profile(black_box(&k), 2048).unwrap())
    });
}

fn sections(c: &mut Criterion) {
    let ball = bodies::ball(3).unwrap();
    let theta = Vec3::new(0.3, -0.2, 0.9);
    c.bench_function("central_section/ball3", |b| {
        b.iter(|| central_section(black_box(&ball), theta).unwrap())
    });
    let shifted = bodies::shifted_ball(Vec3::new(0.0, 0.0, 0.3), 2).unwrap();
    let mut g = c.benchmark_group("centered");
    g.sample_size(10);
    g.bench_function("find_centered_section/shifted_ball2", |b| {
        b.iter(|| find_centered_section(black_box(&shifted), 2).unwrap())
    });
    g.finish();
}

criterion_group!(benches, distances, profiles, sections);
criterion_main!(benches);
