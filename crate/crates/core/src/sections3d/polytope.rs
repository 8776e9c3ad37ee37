use nalgebra::SymmetricEigen;
use serde::{Deserialize, Serialize};

use super::hull::hull_facets;
use crate::linalg::spd_pow3;
use crate::{GeomError, Mat3, Result, Vec3, TAU_GEOM, TAU_NUM};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Facet {
    /// Vertex indices, counter-clockwise seen from outside.
    pub cycle: Vec<usize>,
    pub normal: Vec3,
    pub offset: f64,
}

/// Convex polytope in ℝ³: hull vertices and planar facets.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConvexPolytope3 {
    vertices: Vec<Vec3>,
    facets: Vec<Facet>,
    edges: Vec<(usize, usize)>,
}

/// Convex hull of `points`. Vertices keep their input order (interior
/// points removed); facets are sorted by their smallest vertex cycle.
pub fn make_polytope(points: &[Vec3]) -> Result<ConvexPolytope3> {
    let raw = hull_facets(points)?;
    let mut used: Vec<usize> = raw.iter().flat_map(|f| f.cycle.iter().copied()).collect();
    used.sort_unstable();
    used.dedup();
    let mut remap = vec![usize::MAX; points.len()];
    for (new, &old) in used.iter().enumerate() {
        remap[old] = new;
    }
    let vertices: Vec<Vec3> = used.iter().map(|&i| points[i]).collect();
    let mut facets: Vec<Facet> = raw
        .into_iter()
        .map(|f| {
            let cycle: Vec<usize> = f.cycle.iter().map(|&i| remap[i]).collect();
            let offset = cycle
                .iter()
                .map(|&i| f.normal.dot(&vertices[i]))
                .sum::<f64>()
                / cycle.len() as f64;
            Facet {
                cycle,
                normal: f.normal,
                offset,
            }
        })
        .collect();
    facets.sort_by(|a, b| a.cycle.cmp(&b.cycle));
    Ok(ConvexPolytope3::from_parts(vertices, facets))
}

impl ConvexPolytope3 {
    fn from_parts(vertices: Vec<Vec3>, facets: Vec<Facet>) -> Self {
        let mut edges: Vec<(usize, usize)> = facets
            .iter()
            .flat_map(|f| {
                let n = f.cycle.len();
                (0..n).map(move |k| {
                    let (a, b) = (f.cycle[k], f.cycle[(k + 1) % n]);
                    (a.min(b), a.max(b))
                })
            })
            .collect();
        edges.sort_unstable();
        edges.dedup();
        Self {
            vertices,
            facets,
            edges,
        }
    }

    pub fn vertices(&self) -> &[Vec3] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Smallest signed distance from the origin to a facet plane.
    pub fn origin_margin(&self) -> f64 {
        self.facets
            .iter()
            .map(|f| f.offset)
            .fold(f64::INFINITY, f64::min)
    }

    pub(crate) fn require_origin_inside(&self) -> Result<()> {
        let margin = self.origin_margin();
        if margin > TAU_GEOM {
            Ok(())
        } else {
            Err(GeomError::OriginOutside { margin })
        }
    }

    pub fn contains(&self, p: Vec3, tol: f64) -> bool {
        self.facets
            .iter()
            .all(|f| f.normal.dot(&p) <= f.offset + tol)
    }

    pub fn circumradius(&self) -> f64 {
        self.vertices.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    /// Image under `x ↦ m x + t` (`m` invertible).
    pub fn transform(&self, m: &Mat3, t: Vec3) -> ConvexPolytope3 {
        let det = m.determinant();
        let inv_t = m.try_inverse().expect("invertible map").transpose();
        let vertices: Vec<Vec3> = self.vertices.iter().map(|v| m * v + t).collect();
        let facets = self
            .facets
            .iter()
            .map(|f| {
                let n = (inv_t * f.normal).normalize();
                let mut cycle = f.cycle.clone();
                if det < 0.0 {
                    cycle.reverse();
                }
                let offset =
                    cycle.iter().map(|&i| n.dot(&vertices[i])).sum::<f64>() / cycle.len() as f64;
                Facet {
                    cycle,
                    normal: n,
                    offset,
                }
            })
            .collect();
        ConvexPolytope3::from_parts(vertices, facets)
    }

    pub fn translate(&self, t: Vec3) -> ConvexPolytope3 {
        self.transform(&Mat3::identity(), t)
    }
}

/// Volume, centroid and second-moment matrix about the centroid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolytopeMoments {
    pub volume: f64,
    pub centroid: Vec3,
    pub second: Mat3,
}

impl PolytopeMoments {
    /// Fan of tetrahedra from the vertex mean; each facet is fanned from its
    /// first vertex. For a tetrahedron with vertices `v₀..v₃` and volume `V`,
    /// `∫ x xᵀ = V/20 (Σ vᵢvᵢᵀ + (Σ vᵢ)(Σ vᵢ)ᵀ)`.
    pub fn of(p: &ConvexPolytope3) -> Self {
        let o = p.vertices.iter().sum::<Vec3>() / p.vertices.len() as f64;
        let mut vol = 0.0;
        let mut first = Vec3::zeros();
        let mut second = Mat3::zeros();
        for f in &p.facets {
            let a = p.vertices[f.cycle[0]] - o;
            for k in 1..f.cycle.len() - 1 {
                let b = p.vertices[f.cycle[k]] - o;
                let c = p.vertices[f.cycle[k + 1]] - o;
                let v = a.dot(&b.cross(&c)) / 6.0;
                let s = a + b + c;
                vol += v;
                first += s * (v / 4.0);
                second +=
                    (a * a.transpose() + b * b.transpose() + c * c.transpose() + s * s.transpose())
                        * (v / 20.0);
            }
        }
        let c = first / vol;
        let second = second - c * c.transpose() * vol;
        Self {
            volume: vol,
            centroid: c + o,
            second: (second + second.transpose()) * 0.5,
        }
    }
}

pub fn centroid3(p: &ConvexPolytope3) -> Vec3 {
    PolytopeMoments::of(p).centroid
}

/// The ellipsoid `{v : (v - center)ᵀ shape (v - center) ≤ 1}` in ℝ³.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Ellipsoid3 {
    center: Vec3,
    shape: Mat3,
}

impl Ellipsoid3 {
    pub fn new(center: Vec3, shape: Mat3) -> Result<Self> {
        let asym = (shape - shape.transpose()).amax();
        if asym > TAU_NUM {
            return Err(GeomError::InvalidArgument(format!(
                "shape asymmetric by {asym:e}"
            )));
        }
        let shape = (shape + shape.transpose()) * 0.5;
        let eig = SymmetricEigen::new(shape);
        if eig.eigenvalues.iter().any(|&l| !(l > TAU_NUM)) {
            return Err(GeomError::Degenerate(
                "shape is not positive definite".into(),
            ));
        }
        Ok(Self { center, shape })
    }

    pub fn center(&self) -> Vec3 {
        self.center
    }

    pub fn shape(&self) -> Mat3 {
        self.shape
    }

    /// Semi-axis lengths, ascending.
    pub fn semi_axes(&self) -> [f64; 3] {
        let eig = SymmetricEigen::new(self.shape);
        let mut r: Vec<f64> = eig.eigenvalues.iter().map(|l| 1.0 / l.sqrt()).collect();
        r.sort_by(f64::total_cmp);
        [r[0], r[1], r[2]]
    }

    /// Image under `x ↦ m x + t`.
    pub fn transform(&self, m: &Mat3, t: Vec3) -> Ellipsoid3 {
        let inv = m.try_inverse().expect("invertible map");
        let s = inv.transpose() * self.shape * inv;
        Ellipsoid3 {
            center: m * self.center + t,
            shape: (s + s.transpose()) * 0.5,
        }
    }

    pub fn approx_eq(&self, other: &Ellipsoid3, tol: f64) -> bool {
        (self.center - other.center).amax() <= tol && (self.shape - other.shape).amax() <= tol
    }
}

/// Gram matrix `G = 5/vol · ∫ (x - c)(x - c)ᵀ` of the moment inner product.
pub fn moment_gram3(p: &ConvexPolytope3) -> Mat3 {
    let m = PolytopeMoments::of(p);
    m.second * (5.0 / m.volume)
}

/// Binet–Legendre ellipsoid; shape matrix `G⁻¹`, centred at the centroid
/// (same duality convention as the planar case).
pub fn binet_legendre_3d(p: &ConvexPolytope3) -> Ellipsoid3 {
    let m = PolytopeMoments::of(p);
    let g = m.second * (5.0 / m.volume);
    let s = g
        .try_inverse()
        .expect("moment form of a valid polytope is SPD");
    Ellipsoid3 {
        center: m.centroid,
        shape: (s + s.transpose()) * 0.5,
    }
}

/// Upper estimate of the linear Banach–Mazur distance to the ball: the body
/// is centred at its centroid and whitened by `G^{-1/2}`; returns
/// circumradius over inradius about the origin.
pub fn global_ball_deviation(p: &ConvexPolytope3) -> f64 {
    let m = PolytopeMoments::of(p);
    let w = spd_pow3(&(m.second * (5.0 / m.volume)), -0.5)
        .expect("moment form of a valid polytope is SPD");
    let q = p.transform(&w, -(w * m.centroid));
    q.circumradius() / q.origin_margin()
}
