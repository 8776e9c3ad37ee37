use serde::{Deserialize, Serialize};

use super::arcs::max_gap;
use super::{is_beta_net, iso_profile, sublevel_arcs, Component, IsometryProfile, StabilityParams};
use crate::convex2d::{shapes, ConvexPolygon};
use crate::metrics::d_bm_affine;
use crate::{GeomError, Result};

/// Slack allowed between the certified bound `1 + eps` and the estimated
/// distance, covering polygonisation of the disc and the rotation grid.
pub const CERTIFICATE_SLACK: f64 = 5e-3;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CertificateReport {
    pub eps: f64,
    pub alpha: f64,
    pub beta: f64,
    pub grid_size: usize,
    pub fires: bool,
    /// Largest gap of the rotational sublevel set (0 when it is the full circle).
    pub max_gap: f64,
    /// Independent `d_bm_affine(K, disc)`, computed only when the test fires.
    pub verified_bm: Option<f64>,
    /// `verified_bm < 1 + eps + CERTIFICATE_SLACK`.
    pub sound: Option<bool>,
}

/// Fires when the approximate rotations `{θ : dev(θ) < α(ε)}` form a
/// `β(ε)`-net of the rotation circle, which forces `d_BM(K, B²) < 1 + ε`.
/// When it fires the conclusion is checked with an independent estimate.
pub fn near_euclidean_certificate(
    k: &ConvexPolygon,
    eps: f64,
    grid: usize,
) -> Result<CertificateReport> {
    let prof = iso_profile(k, grid)?;
    certificate_from_profile(k, &prof, eps)
}

pub(crate) fn certificate_from_profile(
    k: &ConvexPolygon,
    prof: &IsometryProfile,
    eps: f64,
) -> Result<CertificateReport> {
    if !(eps > 0.0 && eps < 1.0) {
        return Err(GeomError::InvalidArgument(format!(
            "eps {eps} outside (0, 1)"
        )));
    }
    let alpha = StabilityParams::alpha_of(eps);
    let beta = StabilityParams::beta_of(eps);
    let arcs = sublevel_arcs(prof, alpha);
    let fires = is_beta_net(&arcs, beta, Component::Rotation);
    let rot = arcs.get(Component::Rotation);
    let gap = if rot.iter().any(|a| a.is_full()) {
        0.0
    } else if rot.is_empty() {
        std::f64::consts::TAU
    } else {
        max_gap(rot)
    };
    let verified_bm = if fires {
        Some(d_bm_affine(k, &shapes::disc(1024), prof.grid_size)?.value)
    } else {
        None
    };
    Ok(CertificateReport {
        eps,
        alpha,
        beta,
        grid_size: prof.grid_size,
        fires,
        max_gap: gap,
        verified_bm,
        sound: verified_bm.map(|v| v < 1.0 + eps + CERTIFICATE_SLACK),
    })
}

/// Smallest `eps ∈ [lo, hi]` (to bisection accuracy) at which the
/// certificate fires; `None` if it does not fire at `hi`. Firing is monotone
/// in `eps` since both `α` and `β` grow with it.
pub fn certificate_threshold(
    k: &ConvexPolygon,
    grid: usize,
    lo: f64,
    hi: f64,
    iters: usize,
) -> Result<Option<f64>> {
    let prof = iso_profile(k, grid)?;
    let fires = |e: f64| -> bool {
        let arcs = sublevel_arcs(&prof, StabilityParams::alpha_of(e));
        is_beta_net(&arcs, StabilityParams::beta_of(e), Component::Rotation)
    };
    if !fires(hi) {
        return Ok(None);
    }
    let (mut a, mut b) = (lo, hi);
    if fires(a) {
        return Ok(Some(a));
    }
    for _ in 0..iters {
        let m = 0.5 * (a + b);
        if fires(m) {
            b = m;
        } else {
            a = m;
        }
    }
    Ok(Some(b))
}
