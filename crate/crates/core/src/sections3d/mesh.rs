use std::collections::HashMap;

use crate::{GeomError, Result, Vec3};

/// Vertices and CCW faces of the icosahedron subdivided `subdiv` times, with
/// vertices projected to the unit sphere (`10·4^k + 2` vertices).
pub fn icosphere_raw(subdiv: u32) -> Result<(Vec<Vec3>, Vec<[usize; 3]>)> {
    if subdiv > 6 {
        return Err(GeomError::InvalidArgument(format!(
            "subdivision level {subdiv} > 6"
        )));
    }
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let raw = [
        (-1.0, phi, 0.0),
        (1.0, phi, 0.0),
        (-1.0, -phi, 0.0),
        (1.0, -phi, 0.0),
        (0.0, -1.0, phi),
        (0.0, 1.0, phi),
        (0.0, -1.0, -phi),
        (0.0, 1.0, -phi),
        (phi, 0.0, -1.0),
        (phi, 0.0, 1.0),
        (-phi, 0.0, -1.0),
        (-phi, 0.0, 1.0),
    ];
    let mut verts: Vec<Vec3> = raw
        .iter()
        .map(|&(x, y, z)| Vec3::new(x, y, z).normalize())
        .collect();
    let mut faces: Vec<[usize; 3]> = vec![
        [0, 11, 5],
        [0, 5, 1],
        [0, 1, 7],
        [0, 7, 10],
        [0, 10, 11],
        [1, 5, 9],
        [5, 11, 4],
        [11, 10, 2],
        [10, 7, 6],
        [7, 1, 8],
        [3, 9, 4],
        [3, 4, 2],
        [3, 2, 6],
        [3, 6, 8],
        [3, 8, 9],
        [4, 9, 5],
        [2, 4, 11],
        [6, 2, 10],
        [8, 6, 7],
        [9, 8, 1],
    ];
    for _ in 0..subdiv {
        let mut cache: HashMap<(usize, usize), usize> = HashMap::new();
        let mut mid = |a: usize, b: usize, verts: &mut Vec<Vec3>| -> usize {
            *cache.entry((a.min(b), a.max(b))).or_insert_with(|| {
                verts.push(((verts[a] + verts[b]) * 0.5).normalize());
                verts.len() - 1
            })
        };
        let mut next = Vec::with_capacity(faces.len() * 4);
        for [a, b, c] in faces {
            let ab = mid(a, b, &mut verts);
            let bc = mid(b, c, &mut verts);
            let ca = mid(c, a, &mut verts);
            next.extend([[a, ab, ca], [b, bc, ab], [c, ca, bc], [ab, bc, ca]]);
        }
        faces = next;
    }
    Ok((verts, faces))
}

/// One representative of each antipodal pair: `z > 0`, or `z = 0` and
/// `y > 0`, or `z = y = 0` and `x > 0` (zero tested within `1e-12`).
pub fn upper_hemisphere(v: Vec3) -> bool {
    let tol = 1e-12;
    if v.z.abs() > tol {
        return v.z > 0.0;
    }
    if v.y.abs() > tol {
        return v.y > 0.0;
    }
    v.x > 0.0
}

/// Icosphere directions with antipodal duplicates removed.
pub fn half_sphere_directions(subdiv: u32) -> Result<Vec<Vec3>> {
    Ok(icosphere_raw(subdiv)?
        .0
        .into_iter()
        .filter(|&v| upper_hemisphere(v))
        .collect())
}
