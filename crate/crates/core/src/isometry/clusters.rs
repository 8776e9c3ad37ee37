use std::f64::consts::TAU;

use serde::{Deserialize, Serialize};

use super::{sublevel_arcs, ArcSet, Component, Interval, IsometryProfile};
use crate::{GeomError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Cluster {
    pub component: Component,
    pub interval: Interval,
    pub representative: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClusterSet {
    pub clusters: Vec<Cluster>,
    pub beta1: f64,
    pub beta0: f64,
}

impl ClusterSet {
    pub fn count(&self, c: Component) -> usize {
        self.clusters.iter().filter(|x| x.component == c).count()
    }
}

/// Groups the arcs of each component into clusters of diameter at most
/// `beta1` and checks that distinct clusters are at least `beta0` apart.
///
/// Arcs are scanned by ascending start angle and merged first-fit; the last
/// cluster may then absorb the first across angle 0. A single arc longer
/// than `beta1` is reported as a violation with `first == second`.
pub fn extract_clusters(arcs: &ArcSet, beta1: f64, beta0: f64) -> Result<ClusterSet> {
    if !(beta0 > 0.0) || (beta1 - beta0 / 2.0).abs() > 1e-12 * beta0 {
        return Err(GeomError::InvalidArgument(format!(
            "expected beta1 = beta0/2, got beta1 = {beta1}, beta0 = {beta0}"
        )));
    }
    let mut clusters = Vec::new();
    for c in Component::BOTH {
        clusters.extend(component_clusters(arcs.get(c), c, beta1, beta0)?);
    }
    Ok(ClusterSet {
        clusters,
        beta1,
        beta0,
    })
}

pub(crate) fn component_clusters(
    arcs: &[Interval],
    component: Component,
    beta1: f64,
    beta0: f64,
) -> Result<Vec<Cluster>> {
    let slack = 1e-12;
    for (i, a) in arcs.iter().enumerate() {
        if a.length > beta1 + slack {
            return Err(GeomError::SeparationViolated {
                component,
                first: i,
                second: i,
                distance: a.length,
            });
        }
    }
    let mut merged: Vec<Interval> = Vec::new();
    for a in arcs {
        match merged.last_mut() {
            Some(cur) if a.end() - cur.start <= beta1 + slack => {
                cur.length = cur.length.max(a.end() - cur.start);
            }
            _ => merged.push(*a),
        }
    }
    if merged.len() > 1 {
        let (first, last) = (merged[0], merged[merged.len() - 1]);
        let span = first.end() + TAU - last.start;
        if span <= beta1 + slack {
            let n = merged.len();
            merged[n - 1] = Interval {
                start: last.start,
                length: span,
            };
            merged.remove(0);
        }
    }
    if merged.len() > 1 {
        let n = merged.len();
        for i in 0..n {
            let j = (i + 1) % n;
            let next = if j == 0 {
                merged[0].start + TAU
            } else {
                merged[j].start
            };
            let gap = next - merged[i].end();
            if gap < beta0 - slack {
                return Err(GeomError::SeparationViolated {
                    component,
                    first: i,
                    second: j,
                    distance: gap,
                });
            }
        }
    }
    Ok(merged
        .into_iter()
        .map(|interval| Cluster {
            component,
            interval,
            representative: interval.midpoint(),
        })
        .collect())
}

/// Cluster counts per component at one sublevel; `None` marks a separation
/// violation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CountRow {
    pub alpha: f64,
    pub rotation: Option<usize>,
    pub reflection: Option<usize>,
}

impl CountRow {
    pub fn total(&self) -> Option<usize> {
        Some(self.rotation? + self.reflection?)
    }
}

/// Cluster counts of the sublevel arcs at each `alpha`, with `beta0 = 2·beta1`.
pub fn cluster_count_curve(prof: &IsometryProfile, beta1: f64, alphas: &[f64]) -> Vec<CountRow> {
    alphas
        .iter()
        .map(|&alpha| {
            let arcs = sublevel_arcs(prof, alpha);
            let count = |c| {
                component_clusters(arcs.get(c), c, beta1, 2.0 * beta1)
                    .ok()
                    .map(|v| v.len())
            };
            CountRow {
                alpha,
                rotation: count(Component::Rotation),
                reflection: count(Component::Reflection),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arcs(v: &[(f64, f64)]) -> ArcSet {
        ArcSet::from_intervals(
            v.iter()
                .map(|&(s, l)| Interval {
                    start: s,
                    length: l,
                })
                .collect(),
            vec![],
        )
    }

    #[test]
    fn constructed_violation() {
        let (b0, b1) = (0.2, 0.1);
        let a = arcs(&[(1.0, 0.0), (1.0 + (b0 + b1) / 2.0, 0.0)]);
        match extract_clusters(&a, b1, b0) {
            Err(GeomError::SeparationViolated { distance, .. }) => {
                assert!((distance - 0.15).abs() < 1e-12)
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn full_circle() {
        let a = arcs(&[(0.0, TAU)]);
        assert!(extract_clusters(&a, 0.5, 1.0).is_err());
        let c = extract_clusters(&a, TAU, 2.0 * TAU).unwrap();
        assert_eq!(c.count(Component::Rotation), 1);
    }

    #[test]
    fn merges_across_zero() {
        let a = arcs(&[(0.01, 0.0), (TAU - 0.01, 0.0), (3.0, 0.0)]);
        let c = extract_clusters(&a, 0.05, 0.1).unwrap();
        assert_eq!(c.count(Component::Rotation), 2);
    }
}
