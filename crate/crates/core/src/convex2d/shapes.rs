//! Standard test bodies.

use std::f64::consts::TAU;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{make_polygon, ConvexPolygon};
use crate::linalg::rotation2;
use crate::Vec2;

/// `[-1, 1]²`.
pub fn square() -> ConvexPolygon {
    regular_polygon_raw(&[(-1.0, -1.0), (1.0, -1.0), (1.0, 1.0), (-1.0, 1.0)])
}

/// The triangle with vertices `(0,0)`, `(1,0)`, `(0,1)`.
pub fn triangle() -> ConvexPolygon {
    regular_polygon_raw(&[(0.0, 0.0), (1.0, 0.0), (0.0, 1.0)])
}

/// Equilateral triangle inscribed in the unit circle, one vertex on the y-axis.
pub fn equilateral_triangle() -> ConvexPolygon {
    regular_polygon(3, 1.0, std::f64::consts::FRAC_PI_2)
}

/// Regular `m`-gon with circumradius `radius`; vertex `k` at angle
/// `phase + 2πk/m`.
pub fn regular_polygon(m: usize, radius: f64, phase: f64) -> ConvexPolygon {
    assert!(m >= 3, "need at least 3 vertices");
    let verts = (0..m)
        .map(|k| {
            let a = phase + TAU * k as f64 / m as f64;
            Vec2::new(radius * a.cos(), radius * a.sin())
        })
        .collect();
    ConvexPolygon::from_ccw_unchecked(verts)
}

/// Unit disc approximated by an inscribed regular `m`-gon.
pub fn disc(m: usize) -> ConvexPolygon {
    regular_polygon(m, 1.0, 0.0)
}

/// Inscribed `m`-gon of the ellipse with semi-axes `a`, `b` rotated by `rot`.
pub fn ellipse_polygon(a: f64, b: f64, rot: f64, m: usize) -> ConvexPolygon {
    let r = rotation2(rot);
    let verts = (0..m)
        .map(|k| {
            let t = TAU * k as f64 / m as f64;
            r * Vec2::new(a * t.cos(), b * t.sin())
        })
        .collect();
    ConvexPolygon::from_ccw_unchecked(verts)
}

/// Hull of `m` points `(1 + amp·ξ_k)·u_k` with `ξ_k` uniform in `[-1, 1]`.
pub fn perturbed_disc(m: usize, amp: f64, seed: u64) -> ConvexPolygon {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pts: Vec<Vec2> = (0..m)
        .map(|k| {
            let t = TAU * k as f64 / m as f64;
            let r = 1.0 + amp * rng.random_range(-1.0..=1.0);
            Vec2::new(r * t.cos(), r * t.sin())
        })
        .collect();
    make_polygon(&pts).expect("perturbed disc is non-degenerate for amp < 1")
}

fn regular_polygon_raw(v: &[(f64, f64)]) -> ConvexPolygon {
    ConvexPolygon::from_ccw_unchecked(v.iter().map(|&(x, y)| Vec2::new(x, y)).collect())
}
