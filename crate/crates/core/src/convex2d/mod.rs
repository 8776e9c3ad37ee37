//! Planar convex bodies represented as strictly convex CCW polygons.

mod ellipse;
mod gauge;
mod moments;
pub mod shapes;
mod support;
mod symmetrize;

pub use ellipse::{
    binet_legendre_ellipse, bl_linear_whitening, bl_normalize, moment_form, Ellipse, MomentForm,
};
pub use gauge::{gauge_radial, inclusion_scale, GaugeForm};
pub use moments::{area_and_moments, centroid, PolygonMoments};
pub use support::{hausdorff_distance, hausdorff_euclidean, SupportForm};
pub use symmetrize::minkowski_symmetrize;

use serde::{Deserialize, Serialize};

use crate::linalg::cross2;
use crate::{GeomError, Mat2, Result, Transform2, Vec2, TAU_GEOM};

/// A planar convex body: vertices in counter-clockwise order, strictly convex.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConvexPolygon {
    vertices: Vec<Vec2>,
}

/// Builds the strictly convex CCW hull of `points`.
///
/// Accepts CW input, unsorted point clouds and interior points. Vertices
/// whose turn is collinear within `TAU_GEOM` (relative to the adjacent edge
/// lengths) are dropped, as are vertices closer than `TAU_GEOM` to a neighbour.
pub fn make_polygon(points: &[Vec2]) -> Result<ConvexPolygon> {
    if points.len() < 3 {
        return Err(GeomError::Degenerate(format!(
            "{} points, need at least 3",
            points.len()
        )));
    }
    if points.iter().any(|p| !p.x.is_finite() || !p.y.is_finite()) {
        return Err(GeomError::InvalidArgument("non-finite coordinate".into()));
    }
    let hull = monotone_chain(points);
    let hull = drop_close(hull);
    if hull.len() < 3 {
        return Err(GeomError::Degenerate(format!(
            "hull has {} vertices",
            hull.len()
        )));
    }
    let poly = ConvexPolygon { vertices: hull };
    let area = poly.area();
    if area < TAU_GEOM {
        return Err(GeomError::Degenerate(format!("hull area {area:e}")));
    }
    Ok(poly)
}

fn turn_is_strict(o: Vec2, a: Vec2, b: Vec2) -> bool {
    let u = a - o;
    let v = b - a;
    cross2(u, v) > TAU_GEOM * u.norm() * v.norm()
}

fn monotone_chain(points: &[Vec2]) -> Vec<Vec2> {
    let mut pts: Vec<Vec2> = points.to_vec();
    pts.sort_by(|a, b| a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y)));
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let mut hull: Vec<Vec2> = Vec::with_capacity(2 * pts.len());
    for &p in &pts {
        while hull.len() >= 2 && !turn_is_strict(hull[hull.len() - 2], hull[hull.len() - 1], p) {
            hull.pop();
        }
        hull.push(p);
    }
    let lower_len = hull.len() + 1;
    for &p in pts.iter().rev().skip(1) {
        while hull.len() >= lower_len
            && !turn_is_strict(hull[hull.len() - 2], hull[hull.len() - 1], p)
        {
            hull.pop();
        }
        hull.push(p);
    }
    hull.pop();
    hull
}

fn drop_close(mut hull: Vec<Vec2>) -> Vec<Vec2> {
    let mut i = 0;
    while hull.len() >= 3 && i < hull.len() {
        let j = (i + 1) % hull.len();
        if (hull[j] - hull[i]).norm() <= TAU_GEOM {
            hull.remove(j);
        } else {
            i += 1;
        }
    }
    hull
}

impl ConvexPolygon {
    /// Wraps vertices already known to be strictly convex and CCW.
    pub(crate) fn from_ccw_unchecked(vertices: Vec<Vec2>) -> Self {
        debug_assert!(vertices.len() >= 3);
        Self { vertices }
    }

    pub fn vertices(&self) -> &[Vec2] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Edge `i` runs from vertex `i` to vertex `i + 1`.
    #[inline]
    pub fn edge(&self, i: usize) -> (Vec2, Vec2) {
        let n = self.vertices.len();
        (self.vertices[i], self.vertices[(i + 1) % n])
    }

    pub fn area(&self) -> f64 {
        let n = self.vertices.len();
        let r = self.vertices[0];
        let mut twice = 0.0;
        for i in 1..n - 1 {
            twice += cross2(self.vertices[i] - r, self.vertices[i + 1] - r);
        }
        0.5 * twice
    }

    /// Image under an affine map; orientation is restored for reflections.
    pub fn transform(&self, t: &Transform2) -> ConvexPolygon {
        let mut vertices: Vec<Vec2> = self.vertices.iter().map(|&v| t.apply(v)).collect();
        if t.det() < 0.0 {
            vertices.reverse();
        }
        Self { vertices }
    }

    pub fn map_linear(&self, m: &Mat2) -> ConvexPolygon {
        self.transform(&Transform2::from_parts(*m, Vec2::zeros()))
    }

    pub fn translate(&self, v: Vec2) -> ConvexPolygon {
        Self {
            vertices: self.vertices.iter().map(|&p| p + v).collect(),
        }
    }

    /// Homothety about the origin; `s` must be positive.
    pub fn scale(&self, s: f64) -> ConvexPolygon {
        assert!(s > 0.0, "scale factor must be positive");
        Self {
            vertices: self.vertices.iter().map(|&p| p * s).collect(),
        }
    }

    /// Point reflection `-P`.
    pub fn negate(&self) -> ConvexPolygon {
        Self {
            vertices: self.vertices.iter().map(|&p| -p).collect(),
        }
    }

    /// Translate so that the centroid sits at the origin.
    pub fn centered(&self) -> ConvexPolygon {
        self.translate(-centroid(self))
    }

    pub fn max_norm(&self) -> f64 {
        self.vertices.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    /// Smallest signed distance from the origin to an edge line (positive
    /// when the origin is interior).
    pub fn origin_margin(&self) -> f64 {
        (0..self.len())
            .map(|i| {
                let (a, b) = self.edge(i);
                let e = b - a;
                cross2(e, -a) / e.norm()
            })
            .fold(f64::INFINITY, f64::min)
    }

    /// Distance from `p` to the polygon (zero inside).
    pub fn distance_to(&self, p: Vec2) -> f64 {
        let mut inside = true;
        let mut best = f64::INFINITY;
        for i in 0..self.len() {
            let (a, b) = self.edge(i);
            let e = b - a;
            if cross2(e, p - a) < 0.0 {
                inside = false;
            }
            let t = ((p - a).dot(&e) / e.norm_squared()).clamp(0.0, 1.0);
            best = best.min((a + e * t - p).norm());
        }
        if inside {
            0.0
        } else {
            best
        }
    }

    pub fn contains(&self, p: Vec2, tol: f64) -> bool {
        (0..self.len()).all(|i| {
            let (a, b) = self.edge(i);
            let e = b - a;
            cross2(e, p - a) / e.norm() >= -tol
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(v: &[(f64, f64)]) -> Vec<Vec2> {
        v.iter().map(|&(x, y)| Vec2::new(x, y)).collect()
    }

    #[test]
    fn square_from_points() {
        let p = make_polygon(&pts(&[(-1., -1.), (1., -1.), (1., 1.), (-1., 1.)])).unwrap();
        assert_eq!(p.len(), 4);
        assert!((p.area() - 4.0).abs() < 1e-15);
    }

    #[test]
    fn collinear_is_degenerate() {
        let e = make_polygon(&pts(&[(0., 0.), (1., 1.), (2., 2.)])).unwrap_err();
        assert!(matches!(e, GeomError::Degenerate(_)));
    }

    #[test]
    fn clockwise_input_is_reoriented() {
        let cw = make_polygon(&pts(&[(-1., -1.), (-1., 1.), (1., 1.), (1., -1.)])).unwrap();
        let ccw = make_polygon(&pts(&[(-1., -1.), (1., -1.), (1., 1.), (-1., 1.)])).unwrap();
        assert_eq!(cw, ccw);
        assert!(cw.area() > 0.0);
    }

    #[test]
    fn interior_and_edge_points_are_dropped() {
        let p = make_polygon(&pts(&[
            (0., 0.),
            (2., 0.),
            (1., 0.),
            (2., 2.),
            (0., 2.),
            (1., 1.),
            (0., 1.),
        ]))
        .unwrap();
        assert_eq!(p.len(), 4);
    }

    #[test]
    fn near_duplicates_collapse() {
        let p = make_polygon(&pts(&[(0., 0.), (1., 0.), (1., 1e-12), (0., 1.)])).unwrap();
        assert_eq!(p.len(), 3);
    }

    #[test]
    fn too_few_points() {
        assert!(make_polygon(&pts(&[(0., 0.), (1., 0.)])).is_err());
    }

    #[test]
    fn reflection_keeps_ccw() {
        let p = shapes::triangle();
        let t = Transform2::new(Mat2::new(1.0, 0.0, 0.0, -1.0), Vec2::zeros()).unwrap();
        assert!(p.transform(&t).area() > 0.0);
    }

    #[test]
    fn distance_to_square() {
        let s = shapes::square();
        assert_eq!(s.distance_to(Vec2::new(0.2, 0.3)), 0.0);
        assert!((s.distance_to(Vec2::new(3.0, 0.0)) - 2.0).abs() < 1e-15);
        assert!((s.distance_to(Vec2::new(2.0, 2.0)) - 2f64.sqrt()).abs() < 1e-15);
    }
}
