//! Shared fixtures for the benchmarks.

use stabgeom::convex2d::{shapes, ConvexPolygon};

/// Deterministic inputs of increasing vertex count.
pub fn polygon_pair(m: usize) -> (ConvexPolygon, ConvexPolygon) {
    (
        shapes::perturbed_disc(m, 0.05, 7),
        shapes::regular_polygon(m / 2 + 3, 1.0, 0.1),
    )
}
