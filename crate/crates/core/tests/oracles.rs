//! Brute-force oracles for the exact 2D routines.

use std::f64::consts::TAU;

use approx::assert_relative_eq;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use stabgeom::convex2d::{
    area_and_moments, binet_legendre_ellipse, centroid, gauge_radial, hausdorff_euclidean,
    inclusion_scale, make_polygon, minkowski_symmetrize, shapes, ConvexPolygon, GaugeForm,
};
use stabgeom::metrics::{d_bm_affine, d_bm_linear, d_bm_to_disc};
use stabgeom::Vec2;

fn random_polygon(r: &mut ChaCha8Rng) -> ConvexPolygon {
    loop {
        let n = r.random_range(3..25);
        let pts: Vec<Vec2> = (0..n)
            .map(|_| Vec2::new(r.random_range(-2.0..2.0), r.random_range(-1.0..1.5)))
            .collect();
        if let Ok(p) = make_polygon(&pts) {
            if p.area() > 0.1 {
                return p;
            }
        }
    }
}

/// Midpoint-rule integrals of 1, x, y, x², xy, y² over the polygon.
fn quadrature(p: &ConvexPolygon, n: usize) -> [f64; 6] {
    let (mut lo, mut hi) = (Vec2::repeat(f64::INFINITY), Vec2::repeat(f64::NEG_INFINITY));
    for v in p.vertices() {
        lo = lo.inf(v);
        hi = hi.sup(v);
    }
    let h = (hi - lo) / n as f64;
    let cell = h.x * h.y;
    let mut acc = [0.0; 6];
    for i in 0..n {
        for j in 0..n {
            let x = lo + Vec2::new((i as f64 + 0.5) * h.x, (j as f64 + 0.5) * h.y);
            if p.contains(x, 0.0) {
                for (a, f) in acc
                    .iter_mut()
                    .zip([1.0, x.x, x.y, x.x * x.x, x.x * x.y, x.y * x.y])
                {
                    *a += f * cell;
                }
            }
        }
    }
    acc
}

#[test]
fn moments_match_quadrature() {
    let mut r = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..5 {
        let p = random_polygon(&mut r);
        let q = quadrature(&p, 700);
        let (area, second) = area_and_moments(&p);
        let c = centroid(&p);
        assert_relative_eq!(area, q[0], max_relative = 5e-3);
        assert!((c.x - q[1] / q[0]).abs() < 5e-3 && (c.y - q[2] / q[0]).abs() < 5e-3);
        // Second moments about the centroid.
        let cxx = q[3] / q[0] - (q[1] / q[0]).powi(2);
        let cxy = q[4] / q[0] - q[1] * q[2] / (q[0] * q[0]);
        let cyy = q[5] / q[0] - (q[2] / q[0]).powi(2);
        let s = second / area;
        assert!((s[(0, 0)] - cxx).abs() < 1e-2, "{} vs {cxx}", s[(0, 0)]);
        assert!((s[(0, 1)] - cxy).abs() < 1e-2);
        assert!((s[(1, 1)] - cyy).abs() < 1e-2);
    }
}

/// For convex sets `sup_{a∈A} d(a, B)` is attained at a vertex of `A`.
fn hausdorff_brute(p: &ConvexPolygon, q: &ConvexPolygon) -> f64 {
    let one = |a: &ConvexPolygon, b: &ConvexPolygon| {
        a.vertices()
            .iter()
            .map(|&v| b.distance_to(v))
            .fold(0.0, f64::max)
    };
    one(p, q).max(one(q, p))
}

#[test]
fn hausdorff_matches_vertex_distances() {
    let mut r = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..200 {
        let p = random_polygon(&mut r);
        let q = random_polygon(&mut r).translate(Vec2::new(
            r.random_range(-1.0..1.0),
            r.random_range(-1.0..1.0),
        ));
        let fast = hausdorff_euclidean(&p, &q);
        let slow = hausdorff_brute(&p, &q);
        assert!(
            (fast - slow).abs() <= 1e-9 * (1.0 + slow),
            "{fast} vs {slow}"
        );
    }
}

#[test]
fn gauge_matches_bisection() {
    let mut r = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..50 {
        let p = random_polygon(&mut r).centered();
        let g = GaugeForm::new(&p).unwrap();
        for _ in 0..20 {
            let x = Vec2::new(r.random_range(-3.0..3.0), r.random_range(-3.0..3.0));
            let (mut lo, mut hi) = (0.0, 100.0);
            for _ in 0..80 {
                let mid = 0.5 * (lo + hi);
                if p.contains(x / mid, 0.0) {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            assert!((g.gauge(x) - hi).abs() < 1e-9 * (1.0 + hi));
        }
        let u = Vec2::new(0.6, 0.8);
        assert_relative_eq!(
            gauge_radial(&p, u).unwrap() * g.gauge(u),
            1.0,
            max_relative = 1e-12
        );
    }
}

#[test]
fn inclusion_scale_is_max_vertex_gauge() {
    let mut r = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..50 {
        let p = random_polygon(&mut r).centered();
        let q = random_polygon(&mut r).centered();
        let g = GaugeForm::new(&p).unwrap();
        let want = q.vertices().iter().map(|&v| g.gauge(v)).fold(0.0, f64::max);
        assert_relative_eq!(inclusion_scale(&p, &q).unwrap(), want, max_relative = 1e-12);
    }
}

#[test]
fn ellipse_polygon_is_its_own_bl_ellipse() {
    let p = shapes::ellipse_polygon(2.0, 0.5, 0.7, 4096);
    let e = binet_legendre_ellipse(&p);
    let (a, b) = e.semi_axes();
    let (a, b) = (a.max(b), a.min(b));
    assert!((a - 2.0).abs() < 1e-5 && (b - 0.5).abs() < 1e-5, "{a} {b}");
}

#[test]
fn symmetrization_support_is_average() {
    let mut r = ChaCha8Rng::seed_from_u64(15);
    for _ in 0..30 {
        let p = random_polygon(&mut r);
        let s = minkowski_symmetrize(&p);
        let h = |k: &ConvexPolygon, u: Vec2| {
            k.vertices()
                .iter()
                .map(|v| v.dot(&u))
                .fold(f64::NEG_INFINITY, f64::max)
        };
        for k in 0..64 {
            let t = TAU * k as f64 / 64.0;
            let u = Vec2::new(t.cos(), t.sin());
            let want = 0.5 * (h(&p, u) + h(&p, -u));
            assert!((h(&s, u) - want).abs() < 1e-12);
        }
    }
}

#[test]
fn known_banach_mazur_values() {
    let disc = shapes::disc(1024);
    let sq = d_bm_linear(&shapes::square(), &disc, 2048).unwrap().value;
    assert!((sq - 2f64.sqrt()).abs() < 2e-3, "{sq}");
    // Square to regular hexagon: the true distance is 3/2, but the optimal map
    // is not orthogonal in BL position, so the estimate stops at 1 + 1/sqrt(3).
    let hex = shapes::regular_polygon(6, 1.0, 0.0);
    let v = d_bm_linear(&shapes::square(), &hex, 2048).unwrap().value;
    assert!(
        v >= 1.5 && (v - (1.0 + 1.0 / 3f64.sqrt())).abs() < 2e-3,
        "{v}"
    );
    // Triangle to disc through the exact-disc path: 2.
    let t = d_bm_to_disc(&shapes::triangle()).unwrap().value;
    assert!((t - 2.0).abs() < 1e-6, "{t}");
    // Triangle to square: 2 in the affine sense. Same restriction, so the
    // estimate lands on 1 + 2/sqrt(3) from above.
    let ts = d_bm_affine(&shapes::triangle(), &shapes::square(), 2048)
        .unwrap()
        .value;
    assert!(
        ts >= 2.0 && (ts - (1.0 + 2.0 / 3f64.sqrt())).abs() < 1e-2,
        "{ts}"
    );
}

/// Chord of the outer of two concentric circles that is tangent to the inner
/// one: the tangent point is its midpoint.
fn tangent_chord(r_in: f64, r_out: f64, angle: f64) -> (Vec2, Vec2, Vec2) {
    let n = Vec2::new(angle.cos(), angle.sin());
    let t = Vec2::new(-n.y, n.x);
    let half = (r_out * r_out - r_in * r_in).sqrt();
    let foot = n * r_in;
    (foot - t * half, foot + t * half, foot)
}

#[test]
fn concentric_disc_chords_are_bisected() {
    let mut r = ChaCha8Rng::seed_from_u64(16);
    for _ in 0..100 {
        let r_in = r.random_range(0.1..1.0);
        let r_out = r_in + r.random_range(0.01..2.0);
        let (a, b, foot) = tangent_chord(r_in, r_out, r.random_range(0.0..TAU));
        assert!((a.norm() - r_out).abs() < 1e-12 && (b.norm() - r_out).abs() < 1e-12);
        assert!(((a - foot).norm() - (b - foot).norm()).abs() < 1e-12);
    }
}

/// Chords through the centroid of a planar body are split in ratio at most 2.
#[test]
fn centroid_chord_ratio_at_most_two() {
    let mut r = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..200 {
        let p = random_polygon(&mut r).centered();
        for k in 0..90 {
            let t = TAU * k as f64 / 90.0;
            let u = Vec2::new(t.cos(), t.sin());
            let ratio = gauge_radial(&p, u).unwrap() / gauge_radial(&p, -u).unwrap();
            assert!(ratio <= 2.0 + 1e-9, "{ratio}");
        }
    }
}
