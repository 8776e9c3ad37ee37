use rayon::prelude::*;

use super::{angle_grid, DistanceEstimate, DistanceKind};
use crate::convex2d::{bl_normalize, ConvexPolygon, SupportForm};
use crate::linalg::{flip2, rotation2};
use crate::{GeomError, Result, Transform2, Vec2};

/// Binet–Legendre distance: both bodies are put in Binet–Legendre position
/// (centroid 0, ellipse = unit disc) and the Euclidean Hausdorff distance is
/// minimised over a grid of `O(2)`.
///
/// The witness is `N_K⁻¹ ∘ g ∘ N_L` with `N` the normalising maps.
pub fn d_bl(k: &ConvexPolygon, l: &ConvexPolygon, grid: usize) -> Result<DistanceEstimate> {
    if grid == 0 {
        return Err(GeomError::InvalidArgument("grid must be positive".into()));
    }
    let (kn, tk) = bl_normalize(k);
    let (ln, tl) = bl_normalize(l);
    let sk = SupportForm::new(&kn);
    let sl = SupportForm::new(&ln);
    let slf = SupportForm::new(&ln.map_linear(&flip2()));
    let thetas: Vec<f64> = angle_grid(grid).collect();
    let rot: Vec<f64> = thetas
        .par_iter()
        .map(|&t| sk.hausdorff_rotated(&sl, t))
        .collect();
    let refl: Vec<f64> = thetas
        .par_iter()
        .map(|&t| sk.hausdorff_rotated(&slf, t))
        .collect();
    let mut best = (f64::INFINITY, 0usize, false);
    for (flip, vals) in [(false, &rot), (true, &refl)] {
        for (i, &v) in vals.iter().enumerate() {
            if v < best.0 {
                best = (v, i, flip);
            }
        }
    }
    let mut g = rotation2(thetas[best.1]);
    if best.2 {
        g *= flip2();
    }
    let witness = tk
        .inverse()
        .compose(&Transform2::from_parts(g, Vec2::zeros()))
        .compose(&tl);
    Ok(DistanceEstimate {
        kind: DistanceKind::Bl,
        value: best.0,
        grid_size: grid,
        is_upper_bound: true,
        witness,
    })
}
