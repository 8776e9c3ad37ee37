use std::f64::consts::TAU;

use serde::{Deserialize, Serialize};

use super::{Component, IsometryProfile};
use crate::TAU_NUM;

/// Closed angular interval `[start, start + length]` on the circle, with
/// `start ∈ [0, 2π)`; `length = 2π` is the whole circle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    pub start: f64,
    pub length: f64,
}

impl Interval {
    pub fn end(&self) -> f64 {
        self.start + self.length
    }

    pub fn is_full(&self) -> bool {
        self.length >= TAU
    }

    pub fn midpoint(&self) -> f64 {
        (self.start + 0.5 * self.length).rem_euclid(TAU)
    }

    pub fn contains(&self, t: f64) -> bool {
        self.is_full() || (t - self.start).rem_euclid(TAU) <= self.length
    }
}

/// Sublevel arcs of both components, sorted by start angle.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ArcSet {
    pub rot: Vec<Interval>,
    pub refl: Vec<Interval>,
}

impl ArcSet {
    pub fn get(&self, c: Component) -> &[Interval] {
        match c {
            Component::Rotation => &self.rot,
            Component::Reflection => &self.refl,
        }
    }

    /// Builds an arc set from raw intervals (normalised and sorted).
    pub fn from_intervals(rot: Vec<Interval>, refl: Vec<Interval>) -> Self {
        let norm = |mut v: Vec<Interval>| {
            for i in &mut v {
                i.start = i.start.rem_euclid(TAU);
                i.length = i.length.clamp(0.0, TAU);
            }
            v.sort_by(|a, b| a.start.total_cmp(&b.start));
            v
        };
        Self {
            rot: norm(rot),
            refl: norm(refl),
        }
    }
}

/// Grid nodes with `dev ≤ λ − τ·min(λ, 1)` grouped into maximal cyclic runs.
///
/// The definition uses the open condition `dev < λ`; on a grid it is
/// realised with a margin, relative for small `λ`.
pub fn sublevel_arcs(prof: &IsometryProfile, lambda: f64) -> ArcSet {
    let thr = lambda - TAU_NUM * lambda.min(1.0);
    let runs = |d: &[f64]| runs_below(d, thr, prof.step());
    ArcSet {
        rot: runs(&prof.dev_rot),
        refl: runs(&prof.dev_refl),
    }
}

fn runs_below(d: &[f64], thr: f64, h: f64) -> Vec<Interval> {
    let n = d.len();
    let inside: Vec<bool> = d.iter().map(|&x| x <= thr).collect();
    if inside.iter().all(|&b| b) {
        return vec![Interval {
            start: 0.0,
            length: TAU,
        }];
    }
    let Some(first_out) = inside.iter().position(|&b| !b) else {
        return Vec::new();
    };
    let mut out = Vec::new();
    let mut i = 0;
    while i < n {
        let idx = (first_out + i) % n;
        if inside[idx] {
            let mut len = 0;
            while i < n && inside[(first_out + i) % n] {
                len += 1;
                i += 1;
            }
            out.push(Interval {
                start: h * idx as f64,
                length: h * (len - 1) as f64,
            });
        } else {
            i += 1;
        }
    }
    out.sort_by(|a, b| a.start.total_cmp(&b.start));
    out
}

/// Whether every closed interval of length `beta` on the component circle
/// meets the arcs, i.e. every gap between consecutive arcs is at most `beta`.
pub fn is_beta_net(arcs: &ArcSet, beta: f64, component: Component) -> bool {
    let v = arcs.get(component);
    if v.is_empty() {
        return false;
    }
    if v.iter().any(Interval::is_full) {
        return true;
    }
    max_gap(v) <= beta + 1e-12
}

pub(crate) fn max_gap(v: &[Interval]) -> f64 {
    let n = v.len();
    (0..n)
        .map(|i| {
            let next = if i + 1 < n {
                v[i + 1].start
            } else {
                v[0].start + TAU
            };
            (next - v[i].end()).max(0.0)
        })
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    fn points(angles: &[f64]) -> ArcSet {
        let v = angles
            .iter()
            .map(|&a| Interval {
                start: a,
                length: 0.0,
            })
            .collect();
        ArcSet::from_intervals(v, vec![])
    }

    #[test]
    fn four_points() {
        let a = points(&[0.0, FRAC_PI_2, 2.0 * FRAC_PI_2, 3.0 * FRAC_PI_2]);
        assert!(is_beta_net(&a, FRAC_PI_2, Component::Rotation));
        assert!(!is_beta_net(
            &a,
            std::f64::consts::FRAC_PI_3,
            Component::Rotation
        ));
        assert!(!is_beta_net(&a, 1.0, Component::Reflection));
    }

    #[test]
    fn wrapping_run() {
        let prof = IsometryProfile {
            grid_size: 8,
            dev_rot: vec![0.0, 0.0, 1.0, 1.0, 1.0, 1.0, 1.0, 0.0],
            dev_refl: vec![0.0; 8],
        };
        let a = sublevel_arcs(&prof, 0.5);
        assert_eq!(a.rot.len(), 1);
        let h = TAU / 8.0;
        assert!((a.rot[0].start - 7.0 * h).abs() < 1e-12);
        assert!((a.rot[0].length - 2.0 * h).abs() < 1e-12);
        assert!(a.refl[0].is_full());
    }
}
