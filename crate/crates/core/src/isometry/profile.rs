use std::f64::consts::TAU;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::Component;
use crate::convex2d::{bl_normalize, ConvexPolygon, SupportForm};
use crate::linalg::{flip2, rotation2};
use crate::{GeomError, Mat2, Result};

/// Deviation `g ↦ d_E(K, gK)` sampled on a uniform grid of each component,
/// for `K` in Binet–Legendre position (so `d_E` is the Euclidean Hausdorff
/// distance).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IsometryProfile {
    pub grid_size: usize,
    pub dev_rot: Vec<f64>,
    pub dev_refl: Vec<f64>,
}

impl IsometryProfile {
    pub fn step(&self) -> f64 {
        TAU / self.grid_size as f64
    }

    pub fn angle(&self, i: usize) -> f64 {
        self.step() * i as f64
    }

    pub fn dev(&self, c: Component) -> &[f64] {
        match c {
            Component::Rotation => &self.dev_rot,
            Component::Reflection => &self.dev_refl,
        }
    }

    pub fn max_dev(&self) -> f64 {
        self.dev_rot
            .iter()
            .chain(&self.dev_refl)
            .copied()
            .fold(0.0, f64::max)
    }

    /// Linear interpolation of the sampled deviation at index angle `t`.
    pub fn interpolate(&self, c: Component, t: f64) -> f64 {
        let d = self.dev(c);
        let x = t.rem_euclid(TAU) / self.step();
        let i = (x.floor() as usize).min(self.grid_size - 1);
        let f = x - i as f64;
        d[i] * (1.0 - f) + d[(i + 1) % self.grid_size] * f
    }

    /// Linear map of the group element with index angle `t`.
    pub fn element(c: Component, t: f64) -> Mat2 {
        match c {
            Component::Rotation => rotation2(t),
            Component::Reflection => rotation2(t) * flip2(),
        }
    }
}

pub fn iso_profile(k: &ConvexPolygon, grid: usize) -> Result<IsometryProfile> {
    if grid < 8 {
        return Err(GeomError::InvalidArgument(format!(
            "profile grid {grid} < 8"
        )));
    }
    let (kn, _) = bl_normalize(k);
    let s = SupportForm::new(&kn);
    let sf = SupportForm::new(&kn.map_linear(&flip2()));
    let step = TAU / grid as f64;
    let dev_rot = (0..grid)
        .into_par_iter()
        .map(|i| s.hausdorff_rotated(&s, step * i as f64))
        .collect();
    let dev_refl = (0..grid)
        .into_par_iter()
        .map(|i| s.hausdorff_rotated(&sf, step * i as f64))
        .collect();
    Ok(IsometryProfile {
        grid_size: grid,
        dev_rot,
        dev_refl,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convex2d::shapes;

    #[test]
    fn square_profile_has_quarter_period() {
        let p = iso_profile(&shapes::square(), 64).unwrap();
        assert!(p.dev_rot[0] < 1e-12);
        for i in 0..64 {
            assert!((p.dev_rot[i] - p.dev_rot[(i + 16) % 64]).abs() < 1e-7);
        }
        assert!(p.dev_rot[8] > 0.1);
        assert!(p.dev_refl[0] < 1e-12);
    }
}
