//! Approximate isometries of a planar body in Binet–Legendre position.
//!
//! `O(2)` is handled as two circles. A rotation is indexed by its angle `θ`;
//! a reflection is indexed by `φ` and stands for `R_φ ∘ F` with `F` the
//! reflection across the x-axis, i.e. the reflection across the line at
//! angle `φ/2`. Both index circles have period `2π` and are measured with the
//! ordinary angular distance.

mod arcs;
mod certificate;
mod clusters;
mod profile;
mod window;

use serde::{Deserialize, Serialize};

pub use arcs::{is_beta_net, sublevel_arcs, ArcSet, Interval};
pub use certificate::{certificate_threshold, near_euclidean_certificate, CertificateReport};
pub use clusters::{cluster_count_curve, extract_clusters, Cluster, ClusterSet, CountRow};
pub use profile::{iso_profile, IsometryProfile};
pub use window::{stable_window_search, StabilityParams, StepCurve};

/// The two circles of `O(2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Component {
    Rotation,
    Reflection,
}

impl Component {
    pub const BOTH: [Component; 2] = [Component::Rotation, Component::Reflection];
}
