//! Distances between convex bodies and the explicit constant tables.

mod bl;
mod bm;
mod constants;
mod vnj;

pub use bl::d_bl;
pub use bm::{d_bm_affine, d_bm_linear, d_bm_to_disc, DistanceEstimate, DistanceKind};
pub use constants::{constants_table, ConstantsTable, ExactConstants};
pub use vnj::{vnj_constant, vnj_ratio};

/// Uniform angle grid `2πk/grid`, `k = 0..grid`.
pub(crate) fn angle_grid(grid: usize) -> impl Iterator<Item = f64> + Clone {
    (0..grid).map(move |k| std::f64::consts::TAU * k as f64 / grid as f64)
}
