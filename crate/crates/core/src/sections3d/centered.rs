use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::mesh::half_sphere_directions;
use super::section::{section_in_frame, SectionFrame};
use super::ConvexPolytope3;
use crate::convex2d::centroid;
use crate::{Mat2, Result, Vec2, Vec3, TAU_NUM};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CenteredSection {
    pub theta: Vec3,
    /// `|p(θ)|`, the distance from the origin to the centroid of `P ∩ θ⊥`.
    pub residual: f64,
    /// Best residual on the direction grid before refinement.
    pub grid_residual: f64,
    pub iterations: usize,
}

const MAX_ITERS: usize = 20;
const CANDIDATES: usize = 4;

/// Centroid of `P ∩ θ⊥` as a vector of ℝ³.
pub fn section_centroid(p: &ConvexPolytope3, theta: Vec3) -> Result<Vec3> {
    let frame = SectionFrame::new(theta)?;
    let poly = section_in_frame(p, &frame)?;
    Ok(frame.to_space(centroid(&poly)))
}

/// Searches for a direction `θ` with `cent(P ∩ θ⊥) = 0`.
///
/// The field `p(θ)` is evaluated on the icosphere directions (one per
/// antipodal pair); the best grid points are refined by damped Gauss–Newton
/// with a finite-difference Jacobian in the tangent plane. The smallest
/// residual reached is returned whether or not it is small.
pub fn find_centered_section(p: &ConvexPolytope3, mesh_subdiv: u32) -> Result<CenteredSection> {
    p.require_origin_inside()?;
    let dirs = half_sphere_directions(mesh_subdiv)?;
    let scale = p.circumradius();
    if let Some(&d) = dirs.first() {
        let r = section_centroid(p, d)?.norm();
        if r <= TAU_NUM * scale {
            return Ok(CenteredSection {
                theta: d,
                residual: r,
                grid_residual: r,
                iterations: 0,
            });
        }
    }
    let res: Vec<f64> = dirs
        .par_iter()
        .map(|&d| {
            section_centroid(p, d)
                .map(|c| c.norm())
                .unwrap_or(f64::INFINITY)
        })
        .collect();
    let mut order: Vec<usize> = (0..dirs.len()).collect();
    order.sort_by(|&a, &b| res[a].total_cmp(&res[b]).then(a.cmp(&b)));
    let grid_residual = res[order[0]];
    let mut best = CenteredSection {
        theta: dirs[order[0]],
        residual: grid_residual,
        grid_residual,
        iterations: 0,
    };
    for &i in order.iter().take(CANDIDATES) {
        let (theta, r, it) = refine(p, dirs[i], res[i]);
        if r < best.residual {
            best = CenteredSection {
                theta,
                residual: r,
                grid_residual,
                iterations: it,
            };
        }
        if best.residual <= 1e-6 * scale {
            break;
        }
    }
    Ok(best)
}

fn refine(p: &ConvexPolytope3, theta0: Vec3, r0: f64) -> (Vec3, f64, usize) {
    let eval = |t: Vec3| section_centroid(p, t).ok();
    let mut theta = theta0;
    let mut r = r0;
    let h = 1e-6;
    let mut iters = 0;
    for _ in 0..MAX_ITERS {
        if r <= 1e-14 * p.circumradius() {
            break;
        }
        iters += 1;
        let Ok(frame) = SectionFrame::new(theta) else {
            break;
        };
        let at = |a: f64, b: f64| (theta + frame.e_u * a + frame.e_v * b).normalize();
        let f = |t: Vec3| eval(t).map(|c| frame.to_plane(c));
        let Some(f0) = f(theta) else { break };
        let cols: Option<Vec<Vec2>> = [(h, 0.0), (0.0, h)]
            .iter()
            .map(|&(a, b)| Some((f(at(a, b))? - f(at(-a, -b))?) / (2.0 * h)))
            .collect();
        let Some(cols) = cols else { break };
        let j = Mat2::from_columns(&[cols[0], cols[1]]);
        let Some(step) = j.try_inverse().map(|inv| -(inv * f0)) else {
            break;
        };
        let mut s = 1.0;
        let mut improved = false;
        for _ in 0..12 {
            let cand = at(step.x * s, step.y * s);
            if let Some(c) = eval(cand) {
                if c.norm() < r {
                    theta = cand;
                    r = c.norm();
                    improved = true;
                    break;
                }
            }
            s *= 0.5;
        }
        if !improved {
            break;
        }
    }
    (theta, r, iters)
}
