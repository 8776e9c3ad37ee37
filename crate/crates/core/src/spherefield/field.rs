use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::SphereMesh;
use crate::convex2d::{hausdorff_euclidean, ConvexPolygon};
use crate::metrics::{d_bm_affine, d_bm_to_disc};
use crate::sections3d::{central_section, ConvexPolytope3};
use crate::{Mat2, Mat3, Result, Vec3};

/// A planar body in the tangent plane of every mesh vertex, in that
/// vertex's frame coordinates.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BodyField {
    pub mesh: SphereMesh,
    pub fibers: Vec<ConvexPolygon>,
}

/// The field `x ↦ P ∩ x⊥`.
pub fn section_field(p: &ConvexPolytope3, mesh: &SphereMesh) -> Result<BodyField> {
    let fibers = mesh
        .vertices
        .par_iter()
        .map(|&x| central_section(p, x).map(|(poly, _)| poly))
        .collect::<Result<Vec<_>>>()?;
    Ok(BodyField {
        mesh: mesh.clone(),
        fibers,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DeltaReport {
    /// Largest sampled `d_BM(K_x, K_y) − 1`.
    pub delta: f64,
    pub worst_pair: (usize, usize),
    /// `max_{x,y} d(K_x, K_a) d(K_a, K_y) − 1` for the anchor `a = 0`.
    pub anchor_bound: f64,
    pub pairs: usize,
    pub seed: u64,
}

/// Samples `d_BM(K_x, K_y) − 1` over the star of vertex 0 plus `pair_budget`
/// seeded random pairs. The pair list is fixed before evaluation.
pub fn monochromaticity_delta(
    field: &BodyField,
    pair_budget: usize,
    seed: u64,
    grid: usize,
) -> Result<DeltaReport> {
    let n = field.fibers.len();
    let mut pairs: Vec<(usize, usize)> = (1..n).map(|x| (0, x)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..pair_budget {
        let i = rng.random_range(0..n);
        let mut j = rng.random_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        pairs.push((i, j));
    }
    let vals = pairs
        .par_iter()
        .map(|&(i, j)| d_bm_affine(&field.fibers[i], &field.fibers[j], grid).map(|d| d.value))
        .collect::<Result<Vec<f64>>>()?;
    let star = vals[..n - 1].iter().copied().fold(1.0, f64::max);
    let mut best = 0;
    for (k, &v) in vals.iter().enumerate() {
        if v > vals[best] {
            best = k;
        }
    }
    Ok(DeltaReport {
        delta: vals[best] - 1.0,
        worst_pair: pairs[best],
        anchor_bound: star * star - 1.0,
        pairs: pairs.len(),
        seed,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EpsReport {
    /// `max_x d_BM(K_x, B²) − 1`.
    pub eps: f64,
    pub worst_vertex: usize,
}

pub fn ellipse_deviation_eps(field: &BodyField) -> Result<EpsReport> {
    let vals = field
        .fibers
        .par_iter()
        .map(|f| d_bm_to_disc(f).map(|d| d.value - 1.0))
        .collect::<Result<Vec<f64>>>()?;
    let mut best = 0;
    for (k, &v) in vals.iter().enumerate() {
        if v > vals[best] {
            best = k;
        }
    }
    Ok(EpsReport {
        eps: vals[best],
        worst_vertex: best,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ContinuityReport {
    pub max_gap: f64,
    pub mean_gap: f64,
    pub max_edge_length: f64,
}

/// Hausdorff gaps between adjacent fibers after transporting one tangent
/// plane onto the other by the rotation of smallest angle between the two
/// vertices.
pub fn continuity_gaps(field: &BodyField) -> ContinuityReport {
    let mesh = &field.mesh;
    let edges = mesh.edges();
    let gaps: Vec<f64> = edges
        .par_iter()
        .map(|&(a, b)| {
            let r = minimal_rotation(mesh.vertices[b], mesh.vertices[a]);
            let (fa, fb) = (&mesh.frames[a], &mesh.frames[b]);
            let (u, v) = (r * fb.e_u, r * fb.e_v);
            let m = Mat2::new(
                u.dot(&fa.e_u),
                v.dot(&fa.e_u),
                u.dot(&fa.e_v),
                v.dot(&fa.e_v),
            );
            hausdorff_euclidean(&field.fibers[a], &field.fibers[b].map_linear(&m))
        })
        .collect();
    ContinuityReport {
        max_gap: gaps.iter().copied().fold(0.0, f64::max),
        mean_gap: gaps.iter().sum::<f64>() / gaps.len().max(1) as f64,
        max_edge_length: mesh.max_edge_length(),
    }
}

/// Rotation taking unit `from` to unit `to` about `from × to`.
fn minimal_rotation(from: Vec3, to: Vec3) -> Mat3 {
    let axis = from.cross(&to);
    let s = axis.norm();
    let c = from.dot(&to);
    if s < 1e-15 {
        return Mat3::identity();
    }
    let k = axis / s;
    let kx = Mat3::new(0.0, -k.z, k.y, k.z, 0.0, -k.x, -k.y, k.x, 0.0);
    Mat3::identity() + kx * s + kx * kx * (1.0 - c)
}
