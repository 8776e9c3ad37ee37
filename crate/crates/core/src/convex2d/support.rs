use std::f64::consts::TAU;

use super::{ConvexPolygon, Ellipse};
use crate::linalg::{cross2, spd_pow2};
use crate::{Result, Vec2};

/// Support-function description of a polygon: unit outward edge normals with
/// unwrapped, increasing angles. Vertex `i + 1` supports every direction in
/// the closed arc between normals `i` and `i + 1`.
#[derive(Debug, Clone)]
pub struct SupportForm {
    verts: Vec<Vec2>,
    normals: Vec<Vec2>,
    nang: Vec<f64>,
}

impl SupportForm {
    pub fn new(p: &ConvexPolygon) -> Self {
        let m = p.len();
        let verts = p.vertices().to_vec();
        let normals: Vec<Vec2> = (0..m)
            .map(|i| {
                let (a, b) = p.edge(i);
                let e = b - a;
                Vec2::new(e.y, -e.x) / e.norm()
            })
            .collect();
        let mut nang = Vec::with_capacity(m);
        nang.push(normals[0].y.atan2(normals[0].x));
        for i in 1..m {
            let (u, v) = (normals[i - 1], normals[i]);
            nang.push(nang[i - 1] + cross2(u, v).atan2(u.dot(&v)));
        }
        Self {
            verts,
            normals,
            nang,
        }
    }

    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.verts.is_empty()
    }

    /// Support function `h(u) = max_v ⟨v, u⟩`.
    pub fn support(&self, u: Vec2) -> f64 {
        self.verts
            .iter()
            .map(|v| v.dot(&u))
            .fold(f64::NEG_INFINITY, f64::max)
    }

    #[inline]
    fn unwrapped(&self, i: usize) -> f64 {
        let m = self.nang.len();
        self.nang[i % m] + TAU * (i / m) as f64
    }

    /// Euclidean Hausdorff distance between `self` and `R_θ(other)`.
    ///
    /// For convex bodies the Hausdorff distance is `max_u |h_A(u) - h_B(u)|`.
    /// Between consecutive normal breakpoints of both polygons the two
    /// support points are fixed vertices `p`, `q`, and the difference is the
    /// sinusoid `⟨p - q, u⟩`, maximised at an arc endpoint or at `u ∥ ±(p - q)`.
    pub fn hausdorff_rotated(&self, other: &SupportForm, theta: f64) -> f64 {
        let (s, c) = theta.sin_cos();
        let rot = |v: Vec2| Vec2::new(c * v.x - s * v.y, s * v.x + c * v.y);
        let m = self.len();
        let n = other.len();

        let start = self.nang[0];
        let phi0 = other.nang[0] + theta;
        let shift = start - (phi0 + (start - phi0).rem_euclid(TAU));
        let q_angle = |j: usize| other.unwrapped(j) + theta + shift;
        let mut jq = 0;
        while jq < 2 * n && q_angle(jq + 1) <= start {
            jq += 1;
        }
        let mut ip = 0;
        let end = start + TAU;
        let mut cur_u = self.normals[0];
        let mut best = 0.0f64;
        for _ in 0..2 * (m + n) + 4 {
            let np = self.unwrapped(ip + 1);
            let nq = q_angle(jq + 1);
            let next = np.min(nq);
            let p = self.verts[(ip + 1) % m];
            let q = rot(other.verts[(jq + 1) % n]);
            if next >= end {
                best = best.max(arc_max(p - q, cur_u, self.normals[0]));
                break;
            }
            let next_u = if np <= nq {
                self.normals[(ip + 1) % m]
            } else {
                rot(other.normals[(jq + 1) % n])
            };
            best = best.max(arc_max(p - q, cur_u, next_u));
            if np <= nq {
                ip += 1;
            }
            if nq <= np {
                jq += 1;
            }
            cur_u = next_u;
        }
        best
    }
}

/// `max |⟨d, u⟩|` over unit `u` in the CCW arc from `ua` to `ub` (arc < π).
#[inline]
fn arc_max(d: Vec2, ua: Vec2, ub: Vec2) -> f64 {
    let in_cone = |x: Vec2| cross2(ua, x) >= 0.0 && cross2(x, ub) >= 0.0;
    if in_cone(d) || in_cone(-d) {
        d.norm()
    } else {
        d.dot(&ua).abs().max(d.dot(&ub).abs())
    }
}

/// Euclidean Hausdorff distance between two convex polygons.
pub fn hausdorff_euclidean(p: &ConvexPolygon, q: &ConvexPolygon) -> f64 {
    SupportForm::new(p).hausdorff_rotated(&SupportForm::new(q), 0.0)
}

/// Hausdorff distance in the norm whose unit ball is `metric` recentred at
/// the origin: both bodies are mapped through `shape^{1/2}` and compared in
/// the Euclidean metric.
pub fn hausdorff_distance(p: &ConvexPolygon, q: &ConvexPolygon, metric: &Ellipse) -> Result<f64> {
    let w = spd_pow2(&metric.shape(), 0.5)?;
    Ok(hausdorff_euclidean(&p.map_linear(&w), &q.map_linear(&w)))
}
