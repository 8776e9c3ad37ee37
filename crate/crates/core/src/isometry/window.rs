use std::f64::consts::TAU;

use serde::{Deserialize, Serialize};

use super::CountRow;
use crate::{GeomError, Result};

/// `a₂` and `b₂`: the planar sandwich constants.
const A2: f64 = 1.0 / 32.0;
const B2: f64 = 32.0;

/// The parameter cascade derived from `eps` and the perturbation size `δ′`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StabilityParams {
    pub eps: f64,
    pub alpha0: f64,
    pub beta0_raw: f64,
    pub b0: u64,
    pub beta0: f64,
    pub alpha1: f64,
    pub alpha2: f64,
    pub beta1: f64,
    pub delta_prime: f64,
    pub alpha3: f64,
}

impl StabilityParams {
    /// `α(ε) = (a₂/2) ε`.
    pub fn alpha_of(eps: f64) -> f64 {
        A2 / 2.0 * eps
    }

    /// `β(ε) = a₂/(2b₂) ε`.
    pub fn beta_of(eps: f64) -> f64 {
        A2 / (2.0 * B2) * eps
    }

    /// `B₀` is the smallest integer `≥ 3` with `2π/B₀ ≤ β(ε)`, which makes
    /// `β₀ = 2π/B₀` the largest admissible value.
    pub fn new(eps: f64, delta_prime: f64) -> Result<Self> {
        if !(eps > 0.0 && eps.is_finite()) || !(delta_prime >= 0.0 && delta_prime.is_finite()) {
            return Err(GeomError::InvalidArgument(format!(
                "eps = {eps}, delta' = {delta_prime}"
            )));
        }
        let alpha0 = Self::alpha_of(eps);
        let beta0_raw = Self::beta_of(eps);
        let mut b0 = ((TAU / beta0_raw).ceil() as u64).max(3);
        while b0 > 3 && TAU / ((b0 - 1) as f64) <= beta0_raw {
            b0 -= 1;
        }
        while TAU / b0 as f64 > beta0_raw {
            b0 += 1;
        }
        let beta0 = TAU / b0 as f64;
        let alpha1 = alpha0 / (2.0 * b0 as f64);
        let alpha2 = alpha1 / 2.0;
        Ok(Self {
            eps,
            alpha0,
            beta0_raw,
            b0,
            beta0,
            alpha1,
            alpha2,
            beta1: beta0 / 2.0,
            delta_prime,
            alpha3: alpha2 - delta_prime,
        })
    }

    /// `α₃ > 8 B₀ δ′`, with a relative margin so that the exact boundary
    /// `δ′ = α₂/(8B₀ + 1)` is rejected despite rounding.
    pub fn check(&self) -> Result<()> {
        let rhs = 8.0 * self.b0 as f64 * self.delta_prime;
        if self.alpha3 - rhs > 1e-12 * self.alpha2 {
            Ok(())
        } else {
            Err(GeomError::PreconditionViolated(format!(
                "alpha3 = {:e} is not > 8·B0·delta' = {:e}",
                self.alpha3, rhs
            )))
        }
    }
}

/// A non-decreasing integer step function of `α`: `count(α)` is the count of
/// the last sample at or below `α` (right-continuous).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StepCurve {
    samples: Vec<(f64, usize)>,
}

impl StepCurve {
    pub fn new(mut samples: Vec<(f64, usize)>) -> Result<Self> {
        if samples.is_empty() {
            return Err(GeomError::InvalidArgument("empty step curve".into()));
        }
        samples.sort_by(|a, b| a.0.total_cmp(&b.0));
        Ok(Self { samples })
    }

    /// Total counts from a cluster-count sweep; fails on a sentinel entry.
    pub fn from_counts(rows: &[CountRow]) -> Result<Self> {
        let samples = rows
            .iter()
            .map(|r| {
                r.total().map(|c| (r.alpha, c)).ok_or_else(|| {
                    GeomError::PreconditionViolated(format!(
                        "cluster separation fails at alpha = {:e}",
                        r.alpha
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(samples)
    }

    pub fn samples(&self) -> &[(f64, usize)] {
        &self.samples
    }

    pub fn count(&self, alpha: f64) -> usize {
        let i = self.samples.partition_point(|s| s.0 <= alpha);
        self.samples[i.saturating_sub(1)].1
    }

    /// Abscissae where the count changes.
    pub fn jumps(&self) -> Vec<f64> {
        self.samples
            .windows(2)
            .filter(|w| w[0].1 != w[1].1)
            .map(|w| w[1].0)
            .collect()
    }
}

/// Smallest `γ₀ ∈ [0, α₃ − 3δ′]` such that the count is constant on
/// `[γ₀, γ₀ + 3δ′]`. Only `0` and jump points can be minimal, so those are
/// the candidates.
pub fn stable_window_search(curve: &StepCurve, params: &StabilityParams) -> Result<f64> {
    params.check()?;
    let width = 3.0 * params.delta_prime;
    let hi = params.alpha3 - width;
    let jumps = curve.jumps();
    let mut candidates = vec![0.0];
    candidates.extend(jumps.iter().copied().filter(|&j| j > 0.0 && j <= hi));
    candidates
        .into_iter()
        .find(|&g| !jumps.iter().any(|&j| j > g && j <= g + width))
        .ok_or_else(|| {
            GeomError::NoStableWindow(format!(
                "{} jumps leave no window of width {width:e} in [0, {:e}]",
                jumps.len(),
                params.alpha3
            ))
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn b0_matches_definition() {
        let p = StabilityParams::new(0.1, 0.0).unwrap();
        assert!(p.beta0 <= p.beta0_raw);
        assert!(TAU / (p.b0 - 1) as f64 > p.beta0_raw);
        assert!((p.alpha0 - 0.1 / 64.0).abs() < 1e-18);
        assert!((p.beta0_raw - 0.1 / 2048.0).abs() < 1e-18);
    }

    #[test]
    fn boundary_is_rejected() {
        let base = StabilityParams::new(0.5, 0.0).unwrap();
        let dp = base.alpha2 / (8.0 * base.b0 as f64 + 1.0);
        let p = StabilityParams::new(0.5, dp).unwrap();
        assert!(matches!(p.check(), Err(GeomError::PreconditionViolated(_))));
        let q = StabilityParams::new(0.5, dp * 0.99).unwrap();
        assert!(q.check().is_ok());
    }

    #[test]
    fn constant_curve() {
        let base = StabilityParams::new(0.5, 0.0).unwrap();
        let p = StabilityParams::new(0.5, base.alpha2 / (80.0 * base.b0 as f64)).unwrap();
        let c = StepCurve::new(vec![(0.0, 4), (p.alpha3, 4)]).unwrap();
        assert_eq!(stable_window_search(&c, &p).unwrap(), 0.0);
    }

    #[test]
    fn skips_jumps() {
        let p = StabilityParams::new(0.5, 0.0).unwrap();
        let dp = p.alpha2 / (100.0 * p.b0 as f64);
        let p = StabilityParams::new(0.5, dp).unwrap();
        let a3 = p.alpha3;
        let c =
            StepCurve::new(vec![(0.0, 1), (1.0 * dp, 2), (2.5 * dp, 3), (a3 / 2.0, 4)]).unwrap();
        let g = stable_window_search(&c, &p).unwrap();
        assert_eq!(g, 2.5 * dp);
    }
}
