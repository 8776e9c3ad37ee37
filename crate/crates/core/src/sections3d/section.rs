use serde::{Deserialize, Serialize};

use super::ConvexPolytope3;
use crate::convex2d::{make_polygon, ConvexPolygon};
use crate::{GeomError, Result, Vec2, Vec3, TAU_NUM};

/// Orthonormal basis `(e_u, e_v)` of `θ⊥` with `{e_u, e_v, θ}` right-handed.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SectionFrame {
    pub theta: Vec3,
    pub e_u: Vec3,
    pub e_v: Vec3,
}

impl SectionFrame {
    /// `e_u = normalize(e₃ × θ)` when `|θ·e₃| < 0.9`, else
    /// `normalize(e₁ × θ)`; `e_v = θ × e_u`.
    pub fn new(theta: Vec3) -> Result<Self> {
        let n = theta.norm();
        if !(n > TAU_NUM) {
            return Err(GeomError::InvalidArgument("zero direction".into()));
        }
        let theta = theta / n;
        let axis = if theta.z.abs() < 0.9 {
            Vec3::z()
        } else {
            Vec3::x()
        };
        let e_u = axis.cross(&theta).normalize();
        let e_v = theta.cross(&e_u);
        Ok(Self { theta, e_u, e_v })
    }

    pub fn to_plane(&self, p: Vec3) -> Vec2 {
        Vec2::new(p.dot(&self.e_u), p.dot(&self.e_v))
    }

    pub fn to_space(&self, q: Vec2) -> Vec3 {
        self.e_u * q.x + self.e_v * q.y
    }
}

/// `P ∩ θ⊥` in the coordinates of the frame of `θ`.
pub fn central_section(p: &ConvexPolytope3, theta: Vec3) -> Result<(ConvexPolygon, SectionFrame)> {
    p.require_origin_inside()?;
    let frame = SectionFrame::new(theta)?;
    Ok((section_in_frame(p, &frame)?, frame))
}

pub(crate) fn section_in_frame(p: &ConvexPolytope3, frame: &SectionFrame) -> Result<ConvexPolygon> {
    let verts = p.vertices();
    let s: Vec<f64> = verts.iter().map(|v| v.dot(&frame.theta)).collect();
    let tol = 1e-12 * p.circumradius();
    let mut pts = Vec::new();
    for (i, &si) in s.iter().enumerate() {
        if si.abs() <= tol {
            pts.push(frame.to_plane(verts[i]));
        }
    }
    for &(a, b) in p.edges() {
        let (sa, sb) = (s[a], s[b]);
        if (sa > tol && sb < -tol) || (sa < -tol && sb > tol) {
            let x = verts[a] + (verts[b] - verts[a]) * (sa / (sa - sb));
            pts.push(frame.to_plane(x));
        }
    }
    make_polygon(&pts)
}
