use rayon::prelude::*;

use super::angle_grid;
use crate::convex2d::{ConvexPolygon, GaugeForm};
use crate::{GeomError, Result, Vec2, TAU_NUM};

/// `max(M, 1/M)` with `M = (‖x+y‖² + ‖x−y‖²) / (2(‖x‖² + ‖y‖²))` in the
/// norm whose unit ball is `k`.
pub fn vnj_ratio(k: &ConvexPolygon, x: Vec2, y: Vec2) -> Result<f64> {
    let g = GaugeForm::new(k)?;
    Ok(ratio(&g, x, y))
}

fn ratio(g: &GaugeForm, x: Vec2, y: Vec2) -> f64 {
    let sq = |v: Vec2| {
        let n = g.gauge(v);
        n * n
    };
    let m = (sq(x + y) + sq(x - y)) / (2.0 * (sq(x) + sq(y)));
    m.max(1.0 / m)
}

/// Lower estimate of the von Neumann–Jordan constant of the norm with unit
/// ball `k`: maximum of [`vnj_ratio`] over all pairs of unit vectors in
/// `grid` equally spaced directions. `grid` must be a multiple of 8 so that
/// the axis and diagonal directions are sampled.
pub fn vnj_constant(k: &ConvexPolygon, grid: usize) -> Result<f64> {
    if grid == 0 || grid % 8 != 0 {
        return Err(GeomError::InvalidArgument(format!(
            "grid {grid} is not a positive multiple of 8"
        )));
    }
    let g = GaugeForm::new(k)?;
    let dirs: Vec<Vec2> = angle_grid(grid)
        .map(|t| Vec2::new(t.cos(), t.sin()))
        .collect();
    let radial: Vec<f64> = dirs.iter().map(|&u| g.radial(u)).collect();
    let half = grid / 2;
    let worst = (0..half)
        .map(|i| {
            let r = radial[i] / radial[i + half];
            r.max(1.0 / r)
        })
        .fold(1.0, f64::max);
    if worst > 1.0 + TAU_NUM {
        return Err(GeomError::NotSymmetric { ratio: worst });
    }
    let units: Vec<Vec2> = dirs.iter().zip(&radial).map(|(&u, &r)| u * r).collect();
    let per_row: Vec<f64> = (0..grid)
        .into_par_iter()
        .map(|i| {
            let x = units[i];
            let mut best = 1.0f64;
            for y in &units[i..] {
                let a = g.gauge(x + y);
                let b = g.gauge(x - y);
                let m = (a * a + b * b) / 4.0;
                best = best.max(m.max(1.0 / m));
            }
            best
        })
        .collect();
    Ok(per_row.into_iter().fold(1.0, f64::max))
}
