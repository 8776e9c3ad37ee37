use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{ellipse_deviation_eps, monochromaticity_delta, section_field, SphereMesh};
use crate::sections3d::{bodies, ConvexPolytope3};
use crate::{GeomError, Result, Vec3};

/// One-parameter families of 3D bodies whose section fields are sampled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    /// The ball for every `t`.
    Ball,
    Cube,
    /// Semi-axes `(1, 1, 1 + t)`.
    Ellipsoid,
    /// Ball translated by `(0, 0, t)`.
    ShiftedBall,
    /// Support function `(1 - t) h_ball + t h_cube`.
    BallCube,
}

impl Family {
    pub fn polytope(self, t: f64, subdiv: u32) -> Result<ConvexPolytope3> {
        match self {
            Family::Ball => bodies::ball(subdiv),
            Family::Cube => Ok(bodies::cube()),
            Family::Ellipsoid => bodies::ellipsoid([1.0, 1.0, 1.0 + t], subdiv),
            Family::ShiftedBall => bodies::shifted_ball(Vec3::new(0.0, 0.0, t), subdiv),
            Family::BallCube => {
                if !(0.0..=1.0).contains(&t) {
                    return Err(GeomError::InvalidArgument(format!(
                        "ball-cube parameter {t} outside [0, 1]"
                    )));
                }
                bodies::ball_cube(t, subdiv)
            }
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Ball => "ball",
            Family::Cube => "cube",
            Family::Ellipsoid => "ellipsoid",
            Family::ShiftedBall => "shifted-ball",
            Family::BallCube => "ball-cube",
        })
    }
}

impl FromStr for Family {
    type Err = GeomError;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "ball" => Family::Ball,
            "cube" => Family::Cube,
            "ellipsoid" => Family::Ellipsoid,
            "shifted-ball" => Family::ShiftedBall,
            "ball-cube" => Family::BallCube,
            _ => return Err(GeomError::InvalidArgument(format!("unknown family '{s}'"))),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExperimentRow {
    pub t: f64,
    pub delta: f64,
    pub eps: f64,
    pub anchor_bound: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScalingReport {
    pub family: Family,
    pub rows: Vec<ExperimentRow>,
    /// Least-squares slope of `log ε` against `log δ` over rows with both
    /// positive; `None` with fewer than two such rows.
    pub exponent: Option<f64>,
    /// `max ε/δ^{1/3}` over rows with `δ > 0`.
    pub c_fit: f64,
    /// `max / min` of `ε/δ^{1/3}` over the same rows.
    pub c_spread: f64,
    /// `c_spread ≤ 2`.
    pub c_stable: bool,
    /// Every row satisfies `ε ≤ c_fit δ^{1/3}` (rows with `δ = 0` need `ε = 0`).
    pub self_consistent: bool,
}

/// `δ` and `ε` of the section field of each family member.
pub fn scaling_experiment(
    family: Family,
    t_values: &[f64],
    mesh: &SphereMesh,
    pair_budget: usize,
    seed: u64,
    grid: usize,
) -> Result<ScalingReport> {
    let mut rows = Vec::with_capacity(t_values.len());
    for &t in t_values {
        let p = family.polytope(t, mesh.subdiv)?;
        let field = section_field(&p, mesh)?;
        let d = monochromaticity_delta(&field, pair_budget, seed, grid)?;
        let e = ellipse_deviation_eps(&field)?;
        rows.push(ExperimentRow {
            t,
            delta: d.delta,
            eps: e.eps,
            anchor_bound: d.anchor_bound,
        });
    }
    Ok(summarize(family, rows))
}

pub(crate) fn summarize(family: Family, rows: Vec<ExperimentRow>) -> ScalingReport {
    let ratios: Vec<f64> = rows
        .iter()
        .filter(|r| r.delta > 0.0)
        .map(|r| r.eps / r.delta.cbrt())
        .collect();
    let c_fit = ratios.iter().copied().fold(0.0, f64::max);
    let c_min = ratios.iter().copied().fold(f64::INFINITY, f64::min);
    let c_spread = if ratios.is_empty() || c_min <= 0.0 {
        f64::INFINITY
    } else {
        c_fit / c_min
    };
    let logs: Vec<(f64, f64)> = rows
        .iter()
        .filter(|r| r.delta > 0.0 && r.eps > 0.0)
        .map(|r| (r.delta.ln(), r.eps.ln()))
        .collect();
    let exponent = (logs.len() >= 2).then(|| {
        let n = logs.len() as f64;
        let mx = logs.iter().map(|p| p.0).sum::<f64>() / n;
        let my = logs.iter().map(|p| p.1).sum::<f64>() / n;
        let sxy: f64 = logs.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
        let sxx: f64 = logs.iter().map(|p| (p.0 - mx).powi(2)).sum();
        sxy / sxx
    });
    let self_consistent = rows.iter().all(|r| {
        if r.delta > 0.0 {
            r.eps <= c_fit * r.delta.cbrt() * (1.0 + 1e-12)
        } else {
            r.eps == 0.0
        }
    });
    ScalingReport {
        family,
        rows,
        exponent,
        c_fit,
        c_spread,
        c_stable: c_spread <= 2.0,
        self_consistent,
    }
}
