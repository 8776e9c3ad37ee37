use super::{make_polygon, ConvexPolygon};
use crate::linalg::cross2;
use crate::Vec2;

/// Minkowski symmetrization `½(P + (−P))` of `p` recentred at its centroid.
/// The result is centrally symmetric about the origin.
pub fn minkowski_symmetrize(p: &ConvexPolygon) -> ConvexPolygon {
    let c = p.centered();
    let sum = minkowski_sum(c.vertices(), c.negate().vertices());
    let half: Vec<Vec2> = sum.into_iter().map(|v| v * 0.5).collect();
    make_polygon(&half).expect("Minkowski sum of a valid polygon is non-degenerate")
}

fn lowest_first(v: &[Vec2]) -> Vec<Vec2> {
    let start = (0..v.len())
        .min_by(|&i, &j| v[i].y.total_cmp(&v[j].y).then(v[i].x.total_cmp(&v[j].x)))
        .unwrap_or(0);
    v[start..]
        .iter()
        .chain(v[..start].iter())
        .copied()
        .collect()
}

/// Vertices of `a ⊕ b` for CCW convex inputs, by merging edge directions.
fn minkowski_sum(a: &[Vec2], b: &[Vec2]) -> Vec<Vec2> {
    let mut p = lowest_first(a);
    let mut q = lowest_first(b);
    let (n, m) = (p.len(), q.len());
    p.extend([p[0], p[1]]);
    q.extend([q[0], q[1]]);
    let mut out = Vec::with_capacity(n + m);
    let (mut i, mut j) = (0, 0);
    while i < n || j < m {
        out.push(p[i] + q[j]);
        let c = cross2(p[i + 1] - p[i], q[j + 1] - q[j]);
        if c >= 0.0 && i < n {
            i += 1;
        }
        if c <= 0.0 && j < m {
            j += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convex2d::{shapes, GaugeForm};

    #[test]
    fn square_is_fixed() {
        let s = minkowski_symmetrize(&shapes::square());
        assert_eq!(s.len(), 4);
        assert!((s.area() - 4.0).abs() < 1e-12);
    }

    #[test]
    fn triangle_becomes_hexagon() {
        let s = minkowski_symmetrize(&shapes::triangle());
        assert_eq!(s.len(), 6);
        let g = GaugeForm::new(&s).unwrap();
        for k in 0..360 {
            let a = (k as f64).to_radians();
            let u = Vec2::new(a.cos(), a.sin());
            assert!((g.radial(u) - g.radial(-u)).abs() < 1e-12);
        }
    }
}
