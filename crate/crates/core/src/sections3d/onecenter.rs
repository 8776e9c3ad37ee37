use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::mesh::half_sphere_directions;
use super::section::{section_in_frame, SectionFrame};
use super::{global_ball_deviation, ConvexPolytope3};
use crate::metrics::d_bm_to_disc;
use crate::{Result, Vec3, TAU_NUM};

/// Worst planar section over a direction sample.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SectionsEps {
    pub eps: f64,
    pub worst_direction: Vec3,
    pub directions: usize,
}

/// `max_θ d_BM(P ∩ θ⊥, B²) − 1` over the icosphere directions.
pub fn sections_eps(p: &ConvexPolytope3, mesh_subdiv: u32) -> Result<SectionsEps> {
    p.require_origin_inside()?;
    let dirs = half_sphere_directions(mesh_subdiv)?;
    let vals: Vec<f64> = dirs
        .par_iter()
        .map(|&d| -> Result<f64> {
            let frame = SectionFrame::new(d)?;
            Ok(d_bm_to_disc(&section_in_frame(p, &frame)?)?.value - 1.0)
        })
        .collect::<Result<_>>()?;
    let mut best = 0;
    for (i, &v) in vals.iter().enumerate() {
        if v > vals[best] {
            best = i;
        }
    }
    Ok(SectionsEps {
        eps: vals[best],
        worst_direction: dirs[best],
        directions: dirs.len(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OneCenterReport {
    pub eps_sections: f64,
    pub eps_global: f64,
    /// `eps_global / √eps_sections`; `None` when `eps_sections ≤ τ_num`.
    pub ratio: Option<f64>,
    pub worst_direction: Vec3,
}

pub fn one_center_report(p: &ConvexPolytope3, mesh_subdiv: u32) -> Result<OneCenterReport> {
    let s = sections_eps(p, mesh_subdiv)?;
    let eps_global = global_ball_deviation(p) - 1.0;
    let ratio = (s.eps > TAU_NUM).then(|| eps_global / s.eps.sqrt());
    Ok(OneCenterReport {
        eps_sections: s.eps,
        eps_global,
        ratio,
        worst_direction: s.worst_direction,
    })
}
