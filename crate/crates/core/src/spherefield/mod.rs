//! Fields of planar convex bodies over a triangulated sphere.

mod experiment;
mod field;
mod mesh;

pub use experiment::{scaling_experiment, ExperimentRow, Family, ScalingReport};
pub use field::{
    continuity_gaps, ellipse_deviation_eps, monochromaticity_delta, section_field, BodyField,
    ContinuityReport, DeltaReport, EpsReport,
};
pub use mesh::{icosphere, SphereMesh};
