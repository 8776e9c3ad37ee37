use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::angle_grid;
use crate::convex2d::{
    binet_legendre_ellipse, bl_linear_whitening, centroid, hausdorff_distance, ConvexPolygon,
    GaugeForm, SupportForm,
};
use crate::linalg::{flip2, rotation2};
use crate::{GeomError, Mat2, Result, Transform2, Vec2};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DistanceKind {
    BmLinear,
    BmAffine,
    /// Affine Banach–Mazur distance to the exact unit disc.
    BmDisc,
    Bl,
}

/// Result of a distance estimator together with a replayable witness.
///
/// For Banach–Mazur kinds the witness `T` maps the second body into the
/// frame of the first. Linear: `K ⊂ TL ⊂ λK` about the origin. Affine:
/// `K ⊂ TL` and `λ` is the least factor with `TL ⊂ λK + z` for some `z`.
/// For `Bl` the witness maps the second body onto a copy with the same
/// Binet–Legendre ellipse as the first and `value` is their Hausdorff
/// distance in that ellipse's metric.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DistanceEstimate {
    pub kind: DistanceKind,
    pub value: f64,
    pub grid_size: usize,
    pub is_upper_bound: bool,
    pub witness: Transform2,
}

impl DistanceEstimate {
    /// Recomputes `value` from the witness alone.
    pub fn replay(&self, k: &ConvexPolygon, l: &ConvexPolygon) -> Result<f64> {
        let tl = l.transform(&self.witness);
        match self.kind {
            DistanceKind::Bl => hausdorff_distance(k, &tl, &binet_legendre_ellipse(k)),
            DistanceKind::BmLinear => {
                let gk = GaugeForm::new(k)?;
                let gl = GaugeForm::new(&tl)?;
                Ok((gk.max_gauge_rotated(&gl, 0.0) * gl.max_gauge_rotated(&gk, 0.0)).max(1.0))
            }
            DistanceKind::BmAffine | DistanceKind::BmDisc => {
                let c = centroid(k);
                Ok(affine_pair(&k.translate(-c), &tl.translate(-c)).0)
            }
        }
    }
}

/// Best orthogonal map `g` (rotation or reflection `R_θ F`) for
/// `λ(g) = min{s : g b ⊂ s a} · min{s : a ⊂ s g b}` over a uniform grid.
/// Returns `(λ, g)`; ties resolve to the first grid element, rotations first.
pub(crate) fn orthogonal_search(
    a: &GaugeForm,
    b: &ConvexPolygon,
    grid: usize,
) -> Result<(f64, Mat2)> {
    let gb = GaugeForm::new(b)?;
    let gbf = GaugeForm::new(&b.map_linear(&flip2()))?;
    let thetas: Vec<f64> = angle_grid(grid).collect();
    let rot: Vec<f64> = thetas
        .par_iter()
        .map(|&t| a.max_gauge_rotated(&gb, t) * gb.max_gauge_rotated(a, -t))
        .collect();
    let refl: Vec<f64> = thetas
        .par_iter()
        .map(|&t| a.max_gauge_rotated(&gbf, t) * gbf.max_gauge_rotated(a, -t))
        .collect();
    let mut best = (f64::INFINITY, 0usize, false);
    for (flip, vals) in [(false, &rot), (true, &refl)] {
        for (i, &v) in vals.iter().enumerate() {
            if v < best.0 {
                best = (v, i, flip);
            }
        }
    }
    let mut g = rotation2(thetas[best.1]);
    if best.2 {
        g *= flip2();
    }
    Ok((best.0, g))
}

/// Linear Banach–Mazur estimate `min{λ : K ⊂ TL ⊂ λK}` over `T` of the form
/// `W_K⁻¹ g W_L`, with `W` the linear Binet–Legendre whitening and `g` on a
/// grid of `O(2)`. Bodies are used as given; the origin must be interior.
pub fn d_bm_linear(k: &ConvexPolygon, l: &ConvexPolygon, grid: usize) -> Result<DistanceEstimate> {
    check_grid(grid)?;
    let wk = bl_linear_whitening(k);
    let wl = bl_linear_whitening(l);
    let ga = GaugeForm::new(&k.map_linear(&wk))?;
    let (value, g) = orthogonal_search(&ga, &l.map_linear(&wl), grid)?;
    let wk_inv = wk.try_inverse().expect("whitening is SPD");
    Ok(DistanceEstimate {
        kind: DistanceKind::BmLinear,
        value: value.max(1.0),
        grid_size: grid,
        is_upper_bound: true,
        witness: Transform2::from_parts(wk_inv * g * wl, Vec2::zeros()),
    })
}

/// Affine Banach–Mazur estimate.
///
/// Both bodies are centred at their centroids and whitened; the linear
/// estimator picks the orthogonal part `g`. For that fixed linear part the
/// optimal translations are found exactly: `K ⊂ TL ⊂ λK + z` splits into the
/// two independent problems "largest homothet of `A` inside `B`" and "largest
/// homothet of `B` inside `A`", and `λ = 1/(r₁r₂)`.
pub fn d_bm_affine(k: &ConvexPolygon, l: &ConvexPolygon, grid: usize) -> Result<DistanceEstimate> {
    check_grid(grid)?;
    let (ck, cl) = (centroid(k), centroid(l));
    let wk = bl_linear_whitening(k);
    let wl = bl_linear_whitening(l);
    let a = k.translate(-ck).map_linear(&wk);
    let ga = GaugeForm::new(&a)?;
    let (_, g) = orthogonal_search(&ga, &l.translate(-cl).map_linear(&wl), grid)?;
    let b = l.translate(-cl).map_linear(&(g * wl));
    let (value, r1, v1) = affine_pair(&a, &b);
    // TL = (B - v1)/r1 ⊃ A, mapped back to the frame of k.
    let wk_inv = wk.try_inverse().expect("whitening is SPD");
    let lin = wk_inv * g * wl / r1;
    let trans = ck - wk_inv * (g * wl * cl + v1) / r1;
    Ok(DistanceEstimate {
        kind: DistanceKind::BmAffine,
        value,
        grid_size: grid,
        is_upper_bound: true,
        witness: Transform2::from_parts(lin, trans),
    })
}

/// Affine Banach–Mazur estimate between `k` and the exact unit disc, with the
/// linear part fixed to the Binet–Legendre whitening (a disc has no
/// orientation to search). The two homothet problems become the largest
/// inscribed disc and the smallest enclosing disc of the whitened body.
/// The witness maps the unit disc into the frame of `k`.
pub fn d_bm_to_disc(k: &ConvexPolygon) -> Result<DistanceEstimate> {
    let ck = centroid(k);
    let w = bl_linear_whitening(k);
    let a = k.translate(-ck).map_linear(&w);
    GaugeForm::new(&a)?;
    let lines = HalfPlanes::of(&a);
    let (r_in, _) = lines.largest_homothet(&vec![1.0; lines.len()]);
    let verts = a.vertices();
    let (neg_r_out, c_out) = golden_max_2d(
        |v| -verts.iter().map(|p| (p - v).norm()).fold(0.0, f64::max),
        lines.bbox,
    );
    let r_out = -neg_r_out;
    let w_inv = w.try_inverse().expect("whitening is SPD");
    Ok(DistanceEstimate {
        kind: DistanceKind::BmDisc,
        value: (r_out / r_in).max(1.0),
        grid_size: 0,
        is_upper_bound: true,
        witness: Transform2::from_parts(w_inv * r_out, w_inv * c_out + ck),
    })
}

/// `(λ, r₁, v₁)` for bodies `a`, `b` containing the origin: `r₁ a + v₁ ⊂ b`
/// is the largest homothet of `a` in `b`, and `λ = 1/(r₁r₂)` with `r₂` the
/// same quantity for `b` in `a`.
fn affine_pair(a: &ConvexPolygon, b: &ConvexPolygon) -> (f64, f64, Vec2) {
    let hb = HalfPlanes::of(b);
    let ha = HalfPlanes::of(a);
    let sa = SupportForm::new(a);
    let sb = SupportForm::new(b);
    let ca: Vec<f64> = hb.normals.iter().map(|&n| sa.support(n)).collect();
    let cb: Vec<f64> = ha.normals.iter().map(|&n| sb.support(n)).collect();
    let (r1, v1) = hb.largest_homothet(&ca);
    let (r2, _) = ha.largest_homothet(&cb);
    ((1.0 / (r1 * r2)).max(1.0), r1, v1)
}

/// Edge lines `n_j · x ≤ h_j` of a polygon.
struct HalfPlanes {
    normals: Vec<Vec2>,
    offsets: Vec<f64>,
    bbox: (Vec2, Vec2),
}

impl HalfPlanes {
    fn of(p: &ConvexPolygon) -> Self {
        let mut normals = Vec::with_capacity(p.len());
        let mut offsets = Vec::with_capacity(p.len());
        for i in 0..p.len() {
            let (s, t) = p.edge(i);
            let e = t - s;
            let n = Vec2::new(e.y, -e.x) / e.norm();
            normals.push(n);
            offsets.push(n.dot(&s));
        }
        let mut lo = Vec2::repeat(f64::INFINITY);
        let mut hi = Vec2::repeat(f64::NEG_INFINITY);
        for v in p.vertices() {
            lo = lo.inf(v);
            hi = hi.sup(v);
        }
        Self {
            normals,
            offsets,
            bbox: (lo, hi),
        }
    }

    fn len(&self) -> usize {
        self.normals.len()
    }

    /// `max{r : rX + v ⊂ self}` where `c_j = h_X(n_j)`; returns `(r, v)`.
    /// `r(v) = min_j (h_j - n_j·v)/c_j` is concave, so a nested golden-section
    /// search over the bounding box finds its maximum.
    fn largest_homothet(&self, c: &[f64]) -> (f64, Vec2) {
        let inv: Vec<f64> = c.iter().map(|x| 1.0 / x).collect();
        golden_max_2d(
            |v| {
                let mut r = f64::INFINITY;
                for j in 0..self.normals.len() {
                    r = r.min((self.offsets[j] - self.normals[j].dot(&v)) * inv[j]);
                }
                r
            },
            self.bbox,
        )
    }
}

const GOLDEN_ITERS: usize = 64;

/// Maximum of a concave function on a box by nested golden-section search.
fn golden_max_2d(f: impl Fn(Vec2) -> f64, bbox: (Vec2, Vec2)) -> (f64, Vec2) {
    let (lo, hi) = bbox;
    let inner = |x: f64| golden_max_1d(|y| f(Vec2::new(x, y)), lo.y, hi.y);
    let (_, x) = golden_max_1d(|x| inner(x).0, lo.x, hi.x);
    let (val, y) = inner(x);
    (val, Vec2::new(x, y))
}

fn golden_max_1d(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> (f64, f64) {
    const INV_PHI: f64 = 0.618_033_988_749_894_8;
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let (mut f1, mut f2) = (f(x1), f(x2));
    for _ in 0..GOLDEN_ITERS {
        if f1 >= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = f(x2);
        }
    }
    if f1 >= f2 {
        (f1, x1)
    } else {
        (f2, x2)
    }
}

fn check_grid(grid: usize) -> Result<()> {
    if grid == 0 {
        return Err(GeomError::InvalidArgument("grid must be positive".into()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convex2d::shapes;
    use std::f64::consts::SQRT_2;

    #[test]
    fn self_distance_is_one() {
        let p = shapes::regular_polygon(7, 1.3, 0.2);
        let d = d_bm_linear(&p, &p, 64).unwrap();
        assert!((d.value - 1.0).abs() < 1e-12);
    }

    #[test]
    fn square_disc_linear() {
        let d = d_bm_linear(&shapes::square(), &shapes::disc(1024), 2048).unwrap();
        assert!((d.value - SQRT_2).abs() < 2e-3, "{}", d.value);
        let r = d.replay(&shapes::square(), &shapes::disc(1024)).unwrap();
        assert!((r - d.value).abs() < 1e-9);
    }

    #[test]
    fn triangle_disc_affine() {
        let t = shapes::triangle();
        let d = d_bm_affine(&t, &shapes::disc(1024), 512).unwrap();
        assert!((d.value - 2.0).abs() < 1e-2, "{}", d.value);
        let r = d.replay(&t, &shapes::disc(1024)).unwrap();
        assert!((r - d.value).abs() < 1e-9, "{r} vs {}", d.value);
    }

    #[test]
    fn disc_fast_path_matches_grid() {
        let p = shapes::perturbed_disc(40, 0.1, 3);
        let a = d_bm_affine(&p, &shapes::disc(1024), 1024).unwrap().value;
        let b = d_bm_to_disc(&p).unwrap().value;
        assert!((a - b).abs() < 2e-3, "{a} vs {b}");
    }
}
