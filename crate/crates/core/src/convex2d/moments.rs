use serde::{Deserialize, Serialize};

use super::ConvexPolygon;
use crate::linalg::cross2;
use crate::{Mat2, Vec2};

/// Area, centroid and second-moment matrix about the centroid.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PolygonMoments {
    pub area: f64,
    pub centroid: Vec2,
    /// `∫ (x - c)(x - c)ᵀ dx` over the body.
    pub second: Mat2,
}

impl PolygonMoments {
    pub fn of(p: &ConvexPolygon) -> Self {
        // Work relative to the vertex mean first to keep the shoelace sums
        // well conditioned for bodies far from the origin.
        let n = p.len() as f64;
        let mean = p.vertices().iter().fold(Vec2::zeros(), |acc, v| acc + v) / n;
        let (area, first) = first_moments(p.vertices(), mean);
        let centroid = mean + first / area;
        let second = second_moments(p.vertices(), centroid);
        PolygonMoments {
            area,
            centroid,
            second,
        }
    }
}

fn first_moments(vertices: &[Vec2], origin: Vec2) -> (f64, Vec2) {
    let n = vertices.len();
    let mut twice_area = 0.0;
    let mut m = Vec2::zeros();
    for i in 0..n {
        let a = vertices[i] - origin;
        let b = vertices[(i + 1) % n] - origin;
        let c = cross2(a, b);
        twice_area += c;
        m += (a + b) * c;
    }
    (0.5 * twice_area, m / 6.0)
}

/// Second moments about `origin`, summed edge by edge over the fan triangles
/// `(origin, v_i, v_{i+1})`.
fn second_moments(vertices: &[Vec2], origin: Vec2) -> Mat2 {
    let n = vertices.len();
    let (mut xx, mut xy, mut yy) = (0.0, 0.0, 0.0);
    for i in 0..n {
        let a = vertices[i] - origin;
        let b = vertices[(i + 1) % n] - origin;
        let c = cross2(a, b);
        xx += c * (a.x * a.x + a.x * b.x + b.x * b.x);
        yy += c * (a.y * a.y + a.y * b.y + b.y * b.y);
        xy += c * (2.0 * a.x * a.y + a.x * b.y + b.x * a.y + 2.0 * b.x * b.y);
    }
    Mat2::new(xx / 12.0, xy / 24.0, xy / 24.0, yy / 12.0)
}

/// Exact centroid of the polygon.
pub fn centroid(p: &ConvexPolygon) -> Vec2 {
    let n = p.len() as f64;
    let mean = p.vertices().iter().fold(Vec2::zeros(), |acc, v| acc + v) / n;
    let (area, first) = first_moments(p.vertices(), mean);
    mean + first / area
}

/// Area and second-moment matrix `∫ (x-c)(x-c)ᵀ` about the centroid.
pub fn area_and_moments(p: &ConvexPolygon) -> (f64, Mat2) {
    let m = PolygonMoments::of(p);
    (m.area, m.second)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convex2d::shapes;

    #[test]
    fn triangle_centroid_and_area() {
        let t = shapes::triangle();
        let c = centroid(&t);
        assert!((c - Vec2::new(1.0 / 3.0, 1.0 / 3.0)).norm() < 1e-15);
        assert!((area_and_moments(&t).0 - 0.5).abs() < 1e-15);
    }

    #[test]
    fn square_moments() {
        let (a, m) = area_and_moments(&shapes::square());
        assert!((a - 4.0).abs() < 1e-14);
        assert!((m[(0, 0)] - 4.0 / 3.0).abs() < 1e-14);
        assert!((m[(1, 1)] - 4.0 / 3.0).abs() < 1e-14);
        assert!(m[(0, 1)].abs() < 1e-14);
        assert!(centroid(&shapes::square()).norm() < 1e-15);
    }

    #[test]
    fn translated_square_centroid() {
        let s = shapes::square().translate(Vec2::new(2.0, 3.0));
        assert!((centroid(&s) - Vec2::new(2.0, 3.0)).norm() < 1e-14);
        // Central moments do not see the translation.
        let (_, m) = area_and_moments(&s);
        assert!((m[(0, 0)] - 4.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn disc_moment_limit() {
        let (_, m) = area_and_moments(&shapes::disc(1024));
        assert!((m[(0, 0)] - std::f64::consts::FRAC_PI_4).abs() < 1e-4);
    }
}
