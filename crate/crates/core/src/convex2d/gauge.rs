use std::f64::consts::TAU;

use super::ConvexPolygon;
use crate::linalg::cross2;
use crate::{GeomError, Result, Vec2, TAU_GEOM};

/// Polar description of a polygon that strictly contains the origin: vertex
/// angles (unwrapped, increasing) and the edge lines `n_i · x = h_i`.
///
/// Evaluates the Minkowski gauge `‖x‖_P = min{t ≥ 0 : x ∈ tP}` by locating
/// the edge hit by the ray through `x`.
#[derive(Debug, Clone)]
pub struct GaugeForm {
    verts: Vec<Vec2>,
    ang: Vec<f64>,
    normals: Vec<Vec2>,
    support: Vec<f64>,
}

impl GaugeForm {
    pub fn new(p: &ConvexPolygon) -> Result<Self> {
        let verts = p.vertices().to_vec();
        let m = verts.len();
        let mut normals = Vec::with_capacity(m);
        let mut support = Vec::with_capacity(m);
        for i in 0..m {
            let (a, b) = p.edge(i);
            let e = b - a;
            let n = Vec2::new(e.y, -e.x) / e.norm();
            normals.push(n);
            support.push(n.dot(&a));
        }
        let margin = support.iter().copied().fold(f64::INFINITY, f64::min);
        if !(margin > TAU_GEOM) {
            return Err(GeomError::OriginOutside { margin });
        }
        let mut ang = Vec::with_capacity(m);
        ang.push(verts[0].y.atan2(verts[0].x));
        for i in 1..m {
            let (u, v) = (verts[i - 1], verts[i]);
            let step = cross2(u, v).atan2(u.dot(&v));
            ang.push(ang[i - 1] + step);
        }
        Ok(Self {
            verts,
            ang,
            normals,
            support,
        })
    }

    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.verts.is_empty()
    }

    pub fn vertices(&self) -> &[Vec2] {
        &self.verts
    }

    /// Smallest distance from the origin to an edge line.
    pub fn inradius(&self) -> f64 {
        self.support.iter().copied().fold(f64::INFINITY, f64::min)
    }

    #[inline]
    fn unwrapped(&self, i: usize) -> f64 {
        let m = self.verts.len();
        self.ang[i % m] + TAU * (i / m) as f64
    }

    /// Index of the edge whose angular span contains `phi`.
    fn locate(&self, phi: f64) -> usize {
        let t = self.ang[0] + (phi - self.ang[0]).rem_euclid(TAU);
        self.ang.partition_point(|&a| a <= t).max(1) - 1
    }

    /// Gauge restricted to edge `i` and its two neighbours; the gauge is the
    /// maximum over all edges, so the neighbours only absorb rounding in the
    /// edge lookup.
    #[inline]
    fn edge_value(&self, i: usize, x: Vec2) -> f64 {
        let m = self.verts.len();
        let mut best = f64::NEG_INFINITY;
        for j in [i + m - 1, i, i + 1] {
            let j = j % m;
            best = best.max(self.normals[j].dot(&x) / self.support[j]);
        }
        best
    }

    /// Minkowski gauge of `x`.
    pub fn gauge(&self, x: Vec2) -> f64 {
        if x.x == 0.0 && x.y == 0.0 {
            return 0.0;
        }
        let i = self.locate(x.y.atan2(x.x));
        self.edge_value(i, x)
    }

    /// Radial function `ρ(u) = max{t : t·u ∈ P}`.
    pub fn radial(&self, u: Vec2) -> f64 {
        1.0 / self.gauge(u)
    }

    /// `max_{q ∈ vert(other)} ‖R_θ q‖_self`, i.e. the smallest λ with
    /// `R_θ(other) ⊂ λ·self`. Runs a linear merge of the two angle sequences.
    pub fn max_gauge_rotated(&self, other: &GaugeForm, theta: f64) -> f64 {
        let (s, c) = theta.sin_cos();
        let m = self.verts.len();
        let phi0 = other.ang[0] + theta;
        let t0 = self.ang[0] + (phi0 - self.ang[0]).rem_euclid(TAU);
        let shift = t0 - phi0;
        let mut i = self.ang.partition_point(|&a| a <= t0).max(1) - 1;
        let mut best = 0.0f64;
        for (k, q) in other.verts.iter().enumerate() {
            let phi = other.ang[k] + theta + shift;
            while i < 3 * m && self.unwrapped(i + 1) <= phi {
                i += 1;
            }
            let x = Vec2::new(c * q.x - s * q.y, s * q.x + c * q.y);
            best = best.max(self.edge_value(i, x));
        }
        best
    }
}

/// Radial function of `p` in the unit direction `u`.
pub fn gauge_radial(p: &ConvexPolygon, u: Vec2) -> Result<f64> {
    let g = GaugeForm::new(p)?;
    Ok(g.radial(u / u.norm()))
}

/// Smallest `λ ≥ 0` with `q ⊂ λ·p` (homothety about the origin).
pub fn inclusion_scale(p: &ConvexPolygon, q: &ConvexPolygon) -> Result<f64> {
    let gp = GaugeForm::new(p)?;
    let margin = q.origin_margin();
    if !(margin > TAU_GEOM) {
        return Err(GeomError::OriginOutside { margin });
    }
    Ok(q.vertices()
        .iter()
        .map(|&v| gp.gauge(v))
        .fold(0.0, f64::max))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convex2d::shapes;
    use std::f64::consts::SQRT_2;

    #[test]
    fn square_radial() {
        let s = shapes::square();
        assert!((gauge_radial(&s, Vec2::new(1.0, 0.0)).unwrap() - 1.0).abs() < 1e-15);
        let diag = Vec2::new(1.0, 1.0).normalize();
        assert!((gauge_radial(&s, diag).unwrap() - SQRT_2).abs() < 1e-14);
    }

    #[test]
    fn outside_origin_is_rejected() {
        let s = shapes::square().translate(Vec2::new(3.0, 0.0));
        assert!(matches!(
            gauge_radial(&s, Vec2::new(1.0, 0.0)),
            Err(GeomError::OriginOutside { .. })
        ));
    }

    #[test]
    fn gauge_matches_edge_maximum() {
        let p = shapes::regular_polygon(7, 1.3, 0.2);
        let g = GaugeForm::new(&p).unwrap();
        for k in 0..500 {
            let a = k as f64 * 0.0137;
            let x = Vec2::new(a.cos(), a.sin()) * (0.5 + (k % 7) as f64);
            let brute = (0..p.len())
                .map(|i| {
                    let (a, b) = p.edge(i);
                    let e = b - a;
                    let n = Vec2::new(e.y, -e.x) / e.norm();
                    n.dot(&x) / n.dot(&a)
                })
                .fold(f64::NEG_INFINITY, f64::max);
            assert!((g.gauge(x) - brute).abs() < 1e-13);
        }
    }

    #[test]
    fn inclusion_scales() {
        let sq = shapes::square();
        let disc = shapes::disc(1024);
        assert!((inclusion_scale(&sq, &disc).unwrap() - 1.0).abs() < 1e-12);
        assert!((inclusion_scale(&disc, &sq).unwrap() - SQRT_2).abs() < 1e-5);
        let t = shapes::regular_polygon(5, 1.0, 0.3);
        assert!((inclusion_scale(&t, &t.scale(2.0)).unwrap() - 2.0).abs() < 1e-13);
    }

    #[test]
    fn rotated_merge_matches_direct_gauges() {
        let p = shapes::regular_polygon(9, 1.0, 0.1);
        let q = shapes::ellipse_polygon(1.4, 0.6, 0.3, 37);
        let gp = GaugeForm::new(&p).unwrap();
        let gq = GaugeForm::new(&q).unwrap();
        for k in 0..200 {
            let theta = -7.0 + k as f64 * 0.0731;
            let rq = q.map_linear(&crate::linalg::rotation2(theta));
            let direct = rq
                .vertices()
                .iter()
                .map(|&v| gp.gauge(v))
                .fold(0.0, f64::max);
            assert!((gp.max_gauge_rotated(&gq, theta) - direct).abs() < 1e-12);
        }
    }
}
