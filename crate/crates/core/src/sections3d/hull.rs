//! Incremental 3D convex hull with coplanar triangles merged into facets.

use std::collections::HashMap;

use crate::{GeomError, Result, Vec3};

struct Tri {
    v: [usize; 3],
    n: Vec3,
    d: f64,
    alive: bool,
}

fn make_tri(pts: &[Vec3], v: [usize; 3]) -> Tri {
    let (a, b, c) = (pts[v[0]], pts[v[1]], pts[v[2]]);
    let n = (b - a).cross(&(c - a)).normalize();
    Tri {
        v,
        n,
        d: n.dot(&a),
        alive: true,
    }
}

/// A merged planar facet: boundary cycle (counter-clockwise seen from
/// outside), unit outward normal and plane offset.
pub(crate) struct RawFacet {
    pub cycle: Vec<usize>,
    pub normal: Vec3,
}

/// Hull facets of `pts`; indices refer to `pts`.
pub(crate) fn hull_facets(pts: &[Vec3]) -> Result<Vec<RawFacet>> {
    if pts.len() < 4 {
        return Err(GeomError::Degenerate(format!(
            "{} points, need at least 4",
            pts.len()
        )));
    }
    if pts.iter().any(|p| !p.iter().all(|x| x.is_finite())) {
        return Err(GeomError::InvalidArgument("non-finite coordinate".into()));
    }
    let scale = pts.iter().map(|p| p.amax()).fold(0.0, f64::max).max(1e-300);
    let eps = crate::TAU_GEOM * scale;

    let i0 = (0..pts.len())
        .min_by(|&a, &b| {
            pts[a]
                .x
                .total_cmp(&pts[b].x)
                .then(pts[a].y.total_cmp(&pts[b].y))
        })
        .unwrap();
    let far = |f: &dyn Fn(Vec3) -> f64| {
        (0..pts.len())
            .max_by(|&a, &b| f(pts[a]).total_cmp(&f(pts[b])))
            .unwrap()
    };
    let i1 = far(&|p| (p - pts[i0]).norm());
    let u = pts[i1] - pts[i0];
    if u.norm() <= eps {
        return Err(GeomError::Degenerate("all points coincide".into()));
    }
    let i2 = far(&|p| u.cross(&(p - pts[i0])).norm() / u.norm());
    let w = u.cross(&(pts[i2] - pts[i0]));
    if w.norm() / u.norm() <= eps {
        return Err(GeomError::Degenerate("points are collinear".into()));
    }
    let wn = w.normalize();
    let i3 = far(&|p| wn.dot(&(p - pts[i0])).abs());
    if wn.dot(&(pts[i3] - pts[i0])).abs() <= eps {
        return Err(GeomError::Degenerate("points are coplanar".into()));
    }

    let inner = (pts[i0] + pts[i1] + pts[i2] + pts[i3]) / 4.0;
    let mut tris: Vec<Tri> = Vec::new();
    let mut edges: HashMap<(usize, usize), usize> = HashMap::new();
    let add = |tris: &mut Vec<Tri>, edges: &mut HashMap<(usize, usize), usize>, v: [usize; 3]| {
        let t = make_tri(pts, v);
        let id = tris.len();
        for k in 0..3 {
            edges.insert((v[k], v[(k + 1) % 3]), id);
        }
        tris.push(t);
    };
    for f in [[i0, i1, i2], [i0, i1, i3], [i0, i2, i3], [i1, i2, i3]] {
        let t = make_tri(pts, f);
        let v = if t.n.dot(&inner) - t.d > 0.0 {
            [f[0], f[2], f[1]]
        } else {
            f
        };
        add(&mut tris, &mut edges, v);
    }

    let mut visible: Vec<bool> = Vec::new();
    for (pi, &p) in pts.iter().enumerate() {
        if [i0, i1, i2, i3].contains(&pi) {
            continue;
        }
        visible.clear();
        visible.extend(tris.iter().map(|t| t.alive && t.n.dot(&p) - t.d > eps));
        if !visible.iter().any(|&b| b) {
            continue;
        }
        let mut horizon = Vec::new();
        for (ti, t) in tris.iter().enumerate() {
            if !visible[ti] {
                continue;
            }
            for k in 0..3 {
                let (a, b) = (t.v[k], t.v[(k + 1) % 3]);
                let nb = edges[&(b, a)];
                if !visible[nb] {
                    horizon.push((a, b));
                }
            }
        }
        for ti in 0..tris.len() {
            if visible[ti] {
                tris[ti].alive = false;
                let v = tris[ti].v;
                for k in 0..3 {
                    edges.remove(&(v[k], v[(k + 1) % 3]));
                }
            }
        }
        for (a, b) in horizon {
            add(&mut tris, &mut edges, [a, b, pi]);
        }
    }
    Ok(merge_coplanar(pts, &tris, &edges, eps))
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn merge_coplanar(
    pts: &[Vec3],
    tris: &[Tri],
    edges: &HashMap<(usize, usize), usize>,
    eps: f64,
) -> Vec<RawFacet> {
    let mut parent: Vec<usize> = (0..tris.len()).collect();
    for (ti, t) in tris.iter().enumerate().filter(|(_, t)| t.alive) {
        for k in 0..3 {
            let (a, b) = (t.v[k], t.v[(k + 1) % 3]);
            let s = edges[&(b, a)];
            let o = &tris[s];
            let coplanar = (t.n - o.n).norm() < 1e-8
                && o.v.iter().all(|&x| (t.n.dot(&pts[x]) - t.d).abs() <= eps)
                && t.v.iter().all(|&x| (o.n.dot(&pts[x]) - o.d).abs() <= eps);
            if coplanar {
                let (ra, rb) = (find(&mut parent, ti), find(&mut parent, s));
                if ra != rb {
                    parent[ra.max(rb)] = ra.min(rb);
                }
            }
        }
    }
    let mut groups: HashMap<usize, Vec<usize>> = HashMap::new();
    for ti in (0..tris.len()).filter(|&i| tris[i].alive) {
        let r = find(&mut parent, ti);
        groups.entry(r).or_default().push(ti);
    }
    let mut roots: Vec<usize> = groups.keys().copied().collect();
    roots.sort_unstable();
    let mut out = Vec::with_capacity(roots.len());
    for r in roots {
        let members = &groups[&r];
        let mut next: HashMap<usize, usize> = HashMap::new();
        let mut normal = Vec3::zeros();
        for &ti in members {
            let t = &tris[ti];
            let (a, b, c) = (pts[t.v[0]], pts[t.v[1]], pts[t.v[2]]);
            normal += (b - a).cross(&(c - a));
            for k in 0..3 {
                let (a, b) = (t.v[k], t.v[(k + 1) % 3]);
                let s = edges[&(b, a)];
                if find(&mut parent, s) != r {
                    next.insert(a, b);
                }
            }
        }
        let start = *next.keys().min().expect("facet has a boundary");
        let mut cycle = vec![start];
        let mut cur = next[&start];
        while cur != start && cycle.len() <= next.len() {
            cycle.push(cur);
            cur = next[&cur];
        }
        out.push(RawFacet {
            cycle,
            normal: normal.normalize(),
        });
    }
    out
}
