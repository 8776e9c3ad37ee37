//! Convex polytopes in ℝ³, their central sections, the centroid field of
//! sections and the one-center probe.

pub mod bodies;
mod centered;
mod hull;
mod mesh;
mod onecenter;
mod polytope;
mod section;

pub use centered::{find_centered_section, section_centroid, CenteredSection};
pub use mesh::{half_sphere_directions, icosphere_raw, upper_hemisphere};
pub use onecenter::{one_center_report, sections_eps, OneCenterReport, SectionsEps};
pub use polytope::{
    binet_legendre_3d, centroid3, global_ball_deviation, make_polytope, moment_gram3,
    ConvexPolytope3, Ellipsoid3, Facet, PolytopeMoments,
};
pub use section::{central_section, SectionFrame};
