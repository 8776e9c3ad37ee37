//! Small dense linear algebra on top of nalgebra.

use nalgebra::{Matrix2, Matrix3, SymmetricEigen, Vector2, Vector3};
use serde::{Deserialize, Serialize};

use crate::{GeomError, Result, TAU_NUM};

pub type Vec2 = Vector2<f64>;
pub type Vec3 = Vector3<f64>;
pub type Mat2 = Matrix2<f64>;
pub type Mat3 = Matrix3<f64>;

#[inline]
pub fn cross2(a: Vec2, b: Vec2) -> f64 {
    a.x * b.y - a.y * b.x
}

#[inline]
pub fn rotation2(theta: f64) -> Mat2 {
    let (s, c) = theta.sin_cos();
    Mat2::new(c, -s, s, c)
}

/// Reflection across the x-axis.
#[inline]
pub fn flip2() -> Mat2 {
    Mat2::new(1.0, 0.0, 0.0, -1.0)
}

/// `m^p` for a symmetric positive-definite 2×2 matrix, through its
/// eigendecomposition. Fails if an eigenvalue is not above `TAU_NUM`.
pub fn spd_pow2(m: &Mat2, p: f64) -> Result<Mat2> {
    let sym = (m + m.transpose()) * 0.5;
    let eig = SymmetricEigen::new(sym);
    if eig
        .eigenvalues
        .iter()
        .any(|&l| l <= TAU_NUM * 1e-6 || !l.is_finite())
    {
        return Err(GeomError::Degenerate(format!(
            "matrix is not positive definite (eigenvalues {:?})",
            eig.eigenvalues.as_slice()
        )));
    }
    let d = Mat2::from_diagonal(&eig.eigenvalues.map(|l| l.powf(p)));
    let out = eig.eigenvectors * d * eig.eigenvectors.transpose();
    Ok((out + out.transpose()) * 0.5)
}

pub fn spd_pow3(m: &Mat3, p: f64) -> Result<Mat3> {
    let sym = (m + m.transpose()) * 0.5;
    let eig = SymmetricEigen::new(sym);
    if eig
        .eigenvalues
        .iter()
        .any(|&l| l <= TAU_NUM * 1e-6 || !l.is_finite())
    {
        return Err(GeomError::Degenerate(format!(
            "matrix is not positive definite (eigenvalues {:?})",
            eig.eigenvalues.as_slice()
        )));
    }
    let d = Mat3::from_diagonal(&eig.eigenvalues.map(|l| l.powf(p)));
    let out = eig.eigenvectors * d * eig.eigenvectors.transpose();
    Ok((out + out.transpose()) * 0.5)
}

/// Invertible affine map `x ↦ linear·x + translation` of the plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Transform2 {
    pub linear: [[f64; 2]; 2],
    pub translation: [f64; 2],
}

impl Transform2 {
    pub fn new(linear: Mat2, translation: Vec2) -> Result<Self> {
        let det = linear.determinant();
        if !(det.abs() > TAU_NUM) || !det.is_finite() {
            return Err(GeomError::Degenerate(format!(
                "transform determinant {det:e}"
            )));
        }
        Ok(Self::from_parts(linear, translation))
    }

    /// Unchecked constructor for maps that are invertible by construction.
    pub(crate) fn from_parts(linear: Mat2, translation: Vec2) -> Self {
        Self {
            linear: [
                [linear[(0, 0)], linear[(0, 1)]],
                [linear[(1, 0)], linear[(1, 1)]],
            ],
            translation: [translation.x, translation.y],
        }
    }

    pub fn identity() -> Self {
        Self::from_parts(Mat2::identity(), Vec2::zeros())
    }

    pub fn linear(&self) -> Mat2 {
        Mat2::new(
            self.linear[0][0],
            self.linear[0][1],
            self.linear[1][0],
            self.linear[1][1],
        )
    }

    pub fn translation(&self) -> Vec2 {
        Vec2::new(self.translation[0], self.translation[1])
    }

    #[inline]
    pub fn apply(&self, p: Vec2) -> Vec2 {
        self.linear() * p + self.translation()
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &Transform2) -> Transform2 {
        let a = self.linear();
        Self::from_parts(
            a * other.linear(),
            a * other.translation() + self.translation(),
        )
    }

    pub fn inverse(&self) -> Transform2 {
        // Construction guarantees |det| > TAU_NUM.
        let inv = self
            .linear()
            .try_inverse()
            .expect("invertible by construction");
        Self::from_parts(inv, -(inv * self.translation()))
    }

    pub fn det(&self) -> f64 {
        self.linear().determinant()
    }
}
