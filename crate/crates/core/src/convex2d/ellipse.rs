use std::f64::consts::{PI, TAU};

use nalgebra::SymmetricEigen;
use serde::{Deserialize, Serialize};

use super::{ConvexPolygon, PolygonMoments};
use crate::linalg::spd_pow2;
use crate::{GeomError, Mat2, Result, Transform2, Vec2, TAU_NUM};

/// The ellipse `{v : (v - center)ᵀ shape (v - center) ≤ 1}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Ellipse {
    center: Vec2,
    shape: Mat2,
}

impl Ellipse {
    pub fn new(center: Vec2, shape: Mat2) -> Result<Self> {
        let asym = (shape[(0, 1)] - shape[(1, 0)]).abs();
        if asym > TAU_NUM {
            return Err(GeomError::InvalidArgument(format!(
                "shape asymmetric by {asym:e}"
            )));
        }
        let shape = (shape + shape.transpose()) * 0.5;
        let eig = SymmetricEigen::new(shape);
        if eig.eigenvalues.iter().any(|&l| !(l > TAU_NUM)) {
            return Err(GeomError::Degenerate(format!(
                "shape eigenvalues {:?} not above tolerance",
                eig.eigenvalues.as_slice()
            )));
        }
        Ok(Self { center, shape })
    }

    pub fn disc(center: Vec2, radius: f64) -> Result<Self> {
        Self::new(center, Mat2::identity() / (radius * radius))
    }

    pub fn center(&self) -> Vec2 {
        self.center
    }

    pub fn shape(&self) -> Mat2 {
        self.shape
    }

    /// Semi-axis lengths, ascending.
    pub fn semi_axes(&self) -> (f64, f64) {
        let eig = SymmetricEigen::new(self.shape);
        let a = 1.0 / eig.eigenvalues[0].sqrt();
        let b = 1.0 / eig.eigenvalues[1].sqrt();
        (a.min(b), a.max(b))
    }

    pub fn contains(&self, p: Vec2, tol: f64) -> bool {
        let d = p - self.center;
        d.dot(&(self.shape * d)) <= 1.0 + tol
    }

    /// Image `g(E)` under an invertible affine map.
    pub fn transform(&self, t: &Transform2) -> Ellipse {
        let inv = t
            .linear()
            .try_inverse()
            .expect("invertible by construction");
        let shape = inv.transpose() * self.shape * inv;
        Ellipse {
            center: t.apply(self.center),
            shape: (shape + shape.transpose()) * 0.5,
        }
    }

    /// Affine map taking the unit disc onto this ellipse (SPD linear part).
    pub fn from_unit_disc(&self) -> Transform2 {
        let a = spd_pow2(&self.shape, -0.5).expect("validated at construction");
        Transform2::from_parts(a, self.center)
    }

    /// Inscribed (or circumscribed) regular `m`-gon image.
    pub fn polygon(&self, m: usize, circumscribed: bool) -> ConvexPolygon {
        let r = if circumscribed {
            1.0 / (PI / m as f64).cos()
        } else {
            1.0
        };
        let t = self.from_unit_disc();
        let verts = (0..m)
            .map(|k| {
                let a = TAU * k as f64 / m as f64;
                t.apply(Vec2::new(r * a.cos(), r * a.sin()))
            })
            .collect();
        ConvexPolygon::from_ccw_unchecked(verts)
    }

    /// Smallest `s` with `other - c_other ⊂ s·(self - c_self)`.
    pub fn containment_scale(&self, other: &Ellipse) -> f64 {
        let a = spd_pow2(&other.shape, -0.5).expect("validated at construction");
        let m = a * self.shape * a;
        let eig = SymmetricEigen::new((m + m.transpose()) * 0.5);
        eig.eigenvalues.max().sqrt()
    }

    pub fn approx_eq(&self, other: &Ellipse, tol: f64) -> bool {
        (self.center - other.center).amax() <= tol && (self.shape - other.shape).amax() <= tol
    }
}

/// Gram matrix of `⟨φ, ψ⟩_K = (n+2)/vol(K) ∫_K φψ` on the standard dual
/// basis, for the body recentred at its centroid (`n = 2`).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MomentForm {
    pub gram: Mat2,
}

pub fn moment_form(p: &ConvexPolygon) -> MomentForm {
    let m = PolygonMoments::of(p);
    let gram = m.second * (4.0 / m.area);
    MomentForm {
        gram: (gram + gram.transpose()) * 0.5,
    }
}

/// Binet–Legendre ellipse of `p`.
///
/// `E(K)` is the polar of the unit ball `{φ : φᵀ G φ ≤ 1}` of the moment
/// form. Identifying the dual plane with the plane through the standard
/// basis, the polar is `{x : xᵀ G⁻¹ x ≤ 1}`, so the shape matrix is `G⁻¹`.
/// This is the convention under which `E(gK) = g E(K)` and `E(E) = E`.
pub fn binet_legendre_ellipse(p: &ConvexPolygon) -> Ellipse {
    let g = moment_form(p).gram;
    let shape = g
        .try_inverse()
        .expect("moment form of a valid polygon is SPD");
    Ellipse {
        center: super::centroid(p),
        shape: (shape + shape.transpose()) * 0.5,
    }
}

/// `G^{-1/2}`: linear whitening that sends the centred Binet–Legendre
/// ellipse to the unit disc.
pub fn bl_linear_whitening(p: &ConvexPolygon) -> Mat2 {
    spd_pow2(&moment_form(p).gram, -0.5).expect("moment form of a valid polygon is SPD")
}

/// Places `p` in Binet–Legendre position: centroid at 0 and `E = B²`.
///
/// The returned map is `x ↦ G^{-1/2}(x - cent(p))`, using the symmetric
/// square root so no rotation is introduced.
pub fn bl_normalize(p: &ConvexPolygon) -> (ConvexPolygon, Transform2) {
    let w = bl_linear_whitening(p);
    let c = super::centroid(p);
    let t = Transform2::from_parts(w, -(w * c));
    (p.transform(&t), t)
}
