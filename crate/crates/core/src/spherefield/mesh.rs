use serde::{Deserialize, Serialize};

use crate::sections3d::{icosphere_raw, SectionFrame};
use crate::{Result, Vec3};

/// Subdivided icosahedron on the unit sphere with a tangent frame per vertex.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SphereMesh {
    pub subdiv: u32,
    pub vertices: Vec<Vec3>,
    pub faces: Vec<[usize; 3]>,
    pub frames: Vec<SectionFrame>,
}

impl SphereMesh {
    /// Undirected edges, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut e: Vec<(usize, usize)> = self
            .faces
            .iter()
            .flat_map(|f| (0..3).map(move |k| (f[k].min(f[(k + 1) % 3]), f[k].max(f[(k + 1) % 3]))))
            .collect();
        e.sort_unstable();
        e.dedup();
        e
    }

    pub fn max_edge_length(&self) -> f64 {
        self.edges()
            .iter()
            .map(|&(a, b)| (self.vertices[a] - self.vertices[b]).norm())
            .fold(0.0, f64::max)
    }
}

pub fn icosphere(subdiv: u32) -> Result<SphereMesh> {
    let (vertices, faces) = icosphere_raw(subdiv)?;
    let frames = vertices
        .iter()
        .map(|&v| SectionFrame::new(v))
        .collect::<Result<_>>()?;
    Ok(SphereMesh {
        subdiv,
        vertices,
        faces,
        frames,
    })
}
