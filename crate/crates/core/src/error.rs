use thiserror::Error;

use crate::isometry::Component;

pub type Result<T> = std::result::Result<T, GeomError>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeomError {
    #[error("degenerate input: {0}")]
    Degenerate(String),

    /// The origin is not strictly interior; `margin` is the smallest signed
    /// distance from the origin to a supporting line or plane.
    #[error("origin is not strictly interior (margin {margin:e})")]
    OriginOutside { margin: f64 },

    #[error("body is not centrally symmetric (worst radial ratio {ratio})")]
    NotSymmetric { ratio: f64 },

    #[error(
        "cluster separation violated on {component:?} component: clusters {first} and {second} \
         are {distance} apart"
    )]
    SeparationViolated {
        component: Component,
        first: usize,
        second: usize,
        distance: f64,
    },

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("no stable window: {0}")]
    NoStableWindow(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
