//! Computational convex geometry around Binet–Legendre (inertia) ellipsoids.
//!
//! The crate is organised by subsystem:
//!
//! - [`convex2d`]: planar convex polygons, exact moments, gauges, Hausdorff
//!   distances and Binet–Legendre ellipses.
//! - [`metrics`]: Banach–Mazur and Binet–Legendre distance estimators, the
//!   von Neumann–Jordan constant and the explicit constant tables.
//! - [`isometry`]: approximate-isometry profiles over O(2), sublevel arcs,
//!   clusters, the near-Euclidean certificate and the stable-window search.
//! - [`sections3d`]: 3D polytopes, central sections, centroid-field zeros and
//!   the one-center probe.
//! - [`spherefield`]: fields of planar bodies over a triangulated sphere and
//!   the monochromaticity experiments.
//!
//! All routines are pure functions of their inputs. Loops over angle grids or
//! mesh directions run through rayon and are reduced in index order, so
//! results are bitwise reproducible regardless of thread count.

pub mod convex2d;
pub mod error;
pub mod isometry;
pub mod linalg;
pub mod metrics;
pub mod sections3d;
pub mod spherefield;

pub use error::{GeomError, Result};
pub use linalg::{Mat2, Mat3, Transform2, Vec2, Vec3};

/// Geometric degeneracy tolerance (areas, margins, duplicate vertices).
pub const TAU_GEOM: f64 = 1e-9;
/// Tolerance for floating comparisons of derived quantities.
pub const TAU_NUM: f64 = 1e-7;

/// Library version string.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Glob import of the common entry points.
pub mod prelude {
    pub use crate::convex2d::{
        area_and_moments, binet_legendre_ellipse, bl_normalize, centroid, gauge_radial,
        hausdorff_distance, inclusion_scale, make_polygon, minkowski_symmetrize, shapes,
        ConvexPolygon, Ellipse, MomentForm,
    };
    pub use crate::isometry::{
        cluster_count_curve, extract_clusters, is_beta_net, iso_profile,
        near_euclidean_certificate, stable_window_search, sublevel_arcs, ArcSet, ClusterSet,
        Component, IsometryProfile, StabilityParams, StepCurve,
    };
    pub use crate::metrics::{
        constants_table, d_bl, d_bm_affine, d_bm_linear, d_bm_to_disc, vnj_constant,
        ConstantsTable, DistanceEstimate, DistanceKind,
    };
    pub use crate::sections3d::{
        binet_legendre_3d, central_section, find_centered_section, global_ball_deviation,
        make_polytope, one_center_report, sections_eps, ConvexPolytope3, Ellipsoid3, SectionFrame,
    };
    pub use crate::spherefield::{
        ellipse_deviation_eps, icosphere, monochromaticity_delta, scaling_experiment,
        section_field, BodyField, ExperimentRow, Family, SphereMesh,
    };
    pub use crate::{GeomError, Mat2, Mat3, Transform2, Vec2, Vec3, TAU_GEOM, TAU_NUM};
}
