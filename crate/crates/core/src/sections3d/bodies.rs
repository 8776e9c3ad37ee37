//! Standard 3D test bodies.

use super::mesh::icosphere_raw;
use super::{make_polytope, ConvexPolytope3};
use crate::{Result, Vec3};

/// `[-1, 1]³`.
pub fn cube() -> ConvexPolytope3 {
    make_polytope(&cube_corners()).expect("cube is a valid polytope")
}

pub fn cube_corners() -> Vec<Vec3> {
    let mut v = Vec::with_capacity(8);
    for x in [-1.0, 1.0] {
        for y in [-1.0, 1.0] {
            for z in [-1.0, 1.0] {
                v.push(Vec3::new(x, y, z));
            }
        }
    }
    v
}

pub fn octahedron() -> ConvexPolytope3 {
    let mut v = Vec::new();
    for k in 0..3 {
        for s in [-1.0, 1.0] {
            let mut p = Vec3::zeros();
            p[k] = s;
            v.push(p);
        }
    }
    make_polytope(&v).expect("octahedron is a valid polytope")
}

/// Hull of the icosphere vertices at level `subdiv` (inscribed in the unit ball).
pub fn ball(subdiv: u32) -> Result<ConvexPolytope3> {
    make_polytope(&icosphere_raw(subdiv)?.0)
}

/// Inscribed polytope of the ellipsoid with semi-axes `axes`.
pub fn ellipsoid(axes: [f64; 3], subdiv: u32) -> Result<ConvexPolytope3> {
    let pts: Vec<Vec3> = icosphere_raw(subdiv)?
        .0
        .into_iter()
        .map(|v| Vec3::new(v.x * axes[0], v.y * axes[1], v.z * axes[2]))
        .collect();
    make_polytope(&pts)
}

/// Ball translated by `shift`.
pub fn shifted_ball(shift: Vec3, subdiv: u32) -> Result<ConvexPolytope3> {
    let pts: Vec<Vec3> = icosphere_raw(subdiv)?
        .0
        .into_iter()
        .map(|v| v + shift)
        .collect();
    make_polytope(&pts)
}

/// `(1 - t)·ball ⊕ t·cube`, whose support function is the convex
/// combination `(1 - t) h_ball + t h_cube`.
pub fn ball_cube(t: f64, subdiv: u32) -> Result<ConvexPolytope3> {
    let (sphere, _) = icosphere_raw(subdiv)?;
    let corners = cube_corners();
    let pts: Vec<Vec3> = sphere
        .iter()
        .flat_map(|&v| corners.iter().map(move |&c| v * (1.0 - t) + c * t))
        .collect();
    make_polytope(&pts)
}
