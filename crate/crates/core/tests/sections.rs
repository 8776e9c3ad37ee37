//! 3D polytopes, sections and sphere fields.

use std::f64::consts::SQRT_2;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use stabgeom::convex2d::{centroid, hausdorff_euclidean, shapes};
use stabgeom::metrics::d_bm_affine;
use stabgeom::sections3d::{
    binet_legendre_3d, bodies, central_section, find_centered_section, global_ball_deviation,
    make_polytope, section_centroid, sections_eps, ConvexPolytope3, PolytopeMoments,
};
use stabgeom::spherefield::{
    continuity_gaps, ellipse_deviation_eps, icosphere, monochromaticity_delta, section_field,
    Family,
};
use stabgeom::{GeomError, Mat3, Vec3};

fn random_polytope(r: &mut ChaCha8Rng) -> ConvexPolytope3 {
    loop {
        let n = r.random_range(4..40);
        let pts: Vec<Vec3> = (0..n)
            .map(|_| {
                Vec3::new(
                    r.random_range(-1.0..1.0),
                    r.random_range(-1.0..1.0),
                    r.random_range(-1.0..1.0),
                )
            })
            .collect();
        if let Ok(p) = make_polytope(&pts) {
            if PolytopeMoments::of(&p).volume > 0.05 {
                return p;
            }
        }
    }
}

/// Rodrigues rotation about the unit axis `k`.
fn axis_rotation(k: Vec3, angle: f64) -> Mat3 {
    let cross = Mat3::new(0.0, -k.z, k.y, k.z, 0.0, -k.x, -k.y, k.x, 0.0);
    Mat3::identity() * angle.cos() + cross * angle.sin() + k * k.transpose() * (1.0 - angle.cos())
}

#[test]
fn hull_satisfies_euler_and_contains_inputs() {
    let mut r = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..100 {
        let n = r.random_range(4..60);
        let pts: Vec<Vec3> = (0..n)
            .map(|_| {
                Vec3::new(
                    r.random_range(-1.0..1.0),
                    r.random_range(-1.0..1.0),
                    r.random_range(-1.0..1.0),
                )
            })
            .collect();
        let Ok(p) = make_polytope(&pts) else { continue };
        let (v, e, f) = (
            p.vertices().len() as i64,
            p.edges().len() as i64,
            p.facets().len() as i64,
        );
        assert_eq!(v - e + f, 2);
        for &q in &pts {
            assert!(p.contains(q, 1e-9));
        }
    }
    let cube = bodies::cube();
    assert_eq!(
        (
            cube.vertices().len(),
            cube.edges().len(),
            cube.facets().len()
        ),
        (8, 12, 6)
    );
}

#[test]
fn coplanar_input_is_degenerate() {
    let pts = [
        Vec3::new(0.0, 0.0, 0.0),
        Vec3::new(1.0, 0.0, 0.0),
        Vec3::new(0.0, 1.0, 0.0),
        Vec3::new(1.0, 1.0, 0.0),
    ];
    assert!(matches!(make_polytope(&pts), Err(GeomError::Degenerate(_))));
}

#[test]
fn moments_match_monte_carlo() {
    let mut r = ChaCha8Rng::seed_from_u64(32);
    let p = random_polytope(&mut r);
    let m = PolytopeMoments::of(&p);
    let samples = 400_000;
    let (mut hits, mut sum) = (0usize, Vec3::zeros());
    for _ in 0..samples {
        let x = Vec3::new(
            r.random_range(-1.0..1.0),
            r.random_range(-1.0..1.0),
            r.random_range(-1.0..1.0),
        );
        if p.contains(x, 0.0) {
            hits += 1;
            sum += x;
        }
    }
    let vol = 8.0 * hits as f64 / samples as f64;
    assert!(
        (vol - m.volume).abs() < 0.02 * 8.0f64.max(m.volume) / 4.0,
        "{vol} vs {}",
        m.volume
    );
    assert!((sum / hits as f64 - m.centroid).norm() < 1e-2);
}

#[test]
fn bl_ellipsoid_is_equivariant() {
    let mut r = ChaCha8Rng::seed_from_u64(33);
    for _ in 0..20 {
        let p = random_polytope(&mut r);
        let m = Mat3::from_fn(|_, _| r.random_range(-2.0..2.0));
        if m.determinant().abs() < 0.3 {
            continue;
        }
        let t = Vec3::new(r.random_range(-1.0..1.0), 0.5, -0.25);
        let lhs = binet_legendre_3d(&p.transform(&m, t));
        let rhs = binet_legendre_3d(&p).transform(&m, t);
        assert!(lhs.approx_eq(&rhs, 1e-7 * (1.0 + rhs.shape().amax())));
    }
}

#[test]
fn section_vertices_lie_on_plane_and_boundary() {
    let mut r = ChaCha8Rng::seed_from_u64(34);
    for _ in 0..50 {
        let p = random_polytope(&mut r);
        let p = p.translate(-PolytopeMoments::of(&p).centroid);
        let theta = Vec3::new(
            r.random_range(-1.0..1.0),
            r.random_range(-1.0..1.0),
            r.random_range(-1.0..1.0),
        );
        if theta.norm() < 0.1 {
            continue;
        }
        let (poly, frame) = central_section(&p, theta).unwrap();
        let n = theta.normalize();
        for q in poly.vertices() {
            let x = frame.to_space(*q);
            assert!(x.dot(&n).abs() < 1e-12);
            assert!(p.contains(x, 1e-9));
            // On the boundary: slightly outward leaves the body.
            assert!(!p.contains(x * (1.0 + 1e-6), 0.0));
        }
    }
}

#[test]
fn octahedron_and_cube_sections() {
    let (sq, _) = central_section(&bodies::octahedron(), Vec3::z()).unwrap();
    assert_eq!(sq.len(), 4);
    assert!(sq.vertices().iter().all(|v| (v.norm() - 1.0).abs() < 1e-12));
    let (face, _) = central_section(&bodies::cube(), Vec3::z()).unwrap();
    assert!((face.area() - 4.0).abs() < 1e-12);
    let (diag, _) = central_section(&bodies::cube(), Vec3::new(1.0, 1.0, 0.0)).unwrap();
    assert!((diag.area() - 4.0 * SQRT_2).abs() < 1e-12);
}

#[test]
fn centred_section_of_tetrahedron() {
    let corners = [
        Vec3::new(1.0, 1.0, 1.0),
        Vec3::new(1.0, -1.0, -1.0),
        Vec3::new(-1.0, 1.0, -1.0),
        Vec3::new(-1.0, -1.0, 1.0),
    ];
    let p = make_polytope(&corners)
        .unwrap()
        .translate(Vec3::new(0.2, -0.1, 0.05));
    let r = find_centered_section(&p, 3).unwrap();
    assert!(r.residual < 1e-6, "{r:?}");
    assert!(section_centroid(&p, r.theta).unwrap().norm() < 1e-6);
    let far = bodies::cube().translate(Vec3::new(3.0, 0.0, 0.0));
    assert!(matches!(
        find_centered_section(&far, 2),
        Err(GeomError::OriginOutside { .. })
    ));
}

#[test]
fn ball_and_cube_one_center_quantities() {
    let ball = bodies::ball(3).unwrap();
    let dev = global_ball_deviation(&ball);
    assert!(dev >= 1.0 && dev < 1.02, "{dev}");
    let s = sections_eps(&bodies::cube(), 3).unwrap();
    assert!((s.eps - (SQRT_2 - 1.0)).abs() < 2e-2, "{}", s.eps);
}

#[test]
fn icosphere_counts_and_frames() {
    for k in 0..=4u32 {
        let m = icosphere(k).unwrap();
        assert_eq!(m.vertices.len(), 10 * 4usize.pow(k) + 2);
        assert_eq!(m.faces.len(), 20 * 4usize.pow(k));
        for (v, f) in m.vertices.iter().zip(&m.frames) {
            assert!((v.norm() - 1.0).abs() < 1e-7);
            assert!(
                f.e_u.dot(v).abs() < 1e-7
                    && f.e_v.dot(v).abs() < 1e-7
                    && f.e_u.dot(&f.e_v).abs() < 1e-7
            );
            assert!((f.e_u.norm() - 1.0).abs() < 1e-7 && (f.e_v.norm() - 1.0).abs() < 1e-7);
        }
    }
    assert!(icosphere(7).is_err());
}

#[test]
fn ball_field_is_nearly_monochromatic_and_round() {
    let mesh = icosphere(2).unwrap();
    let ball = bodies::ball(3).unwrap();
    let field = section_field(&ball, &mesh).unwrap();
    let disc = shapes::disc(512);
    for f in &field.fibers {
        assert!(hausdorff_euclidean(f, &disc) < 2e-2);
    }
    let d = monochromaticity_delta(&field, 200, 0x5EED, 512).unwrap();
    assert!(d.delta <= 4e-2, "{}", d.delta);
    assert!(d.delta <= d.anchor_bound + 1e-12);
    let e = ellipse_deviation_eps(&field).unwrap();
    assert!(e.eps <= 4e-2);
}

#[test]
fn cube_field_reaches_square_deviation() {
    let mesh = icosphere(2).unwrap();
    let field = section_field(&bodies::cube(), &mesh).unwrap();
    let e = ellipse_deviation_eps(&field).unwrap();
    assert!((e.eps - (SQRT_2 - 1.0)).abs() < 2e-2, "{}", e.eps);
    let d = monochromaticity_delta(&field, 300, 7, 512).unwrap();
    assert!(d.delta <= d.anchor_bound + 1e-12);
}

/// Largest `d_BM − 1` over every pair of fibers.
fn all_pairs_delta(fibers: &[stabgeom::convex2d::ConvexPolygon]) -> f64 {
    let mut worst: f64 = 0.0;
    for i in 0..fibers.len() {
        for j in i + 1..fibers.len() {
            worst = worst.max(d_bm_affine(&fibers[i], &fibers[j], 512).unwrap().value - 1.0);
        }
    }
    worst
}

#[test]
fn field_statistics_respect_mesh_symmetries() {
    // A fifth turn about a vertex axis maps the icosphere onto itself, so the
    // rotated body sees the same set of sections.
    let mesh = icosphere(1).unwrap();
    let k = mesh.vertices[0];
    let rot = axis_rotation(k, std::f64::consts::TAU / 5.0);
    for v in &mesh.vertices {
        assert!(mesh.vertices.iter().any(|w| (rot * v - w).norm() < 1e-9));
    }
    let p = Family::BallCube.polytope(0.3, 2).unwrap();
    let q = p.transform(&rot, Vec3::zeros());
    let (fp, fq) = (
        section_field(&p, &mesh).unwrap(),
        section_field(&q, &mesh).unwrap(),
    );
    let (ep, eq) = (
        ellipse_deviation_eps(&fp).unwrap().eps,
        ellipse_deviation_eps(&fq).unwrap().eps,
    );
    assert!((ep - eq).abs() < 1e-7, "{ep} vs {eq}");
    let (dp, dq) = (all_pairs_delta(&fp.fibers), all_pairs_delta(&fq.fibers));
    assert!((dp - dq).abs() < 1e-2 * (1.0 + dp), "{dp} vs {dq}");
}

#[test]
fn continuity_gaps_shrink_with_mesh() {
    let body = bodies::ellipsoid([1.0, 1.0, 1.3], 3).unwrap();
    let gaps: Vec<(f64, f64)> = (2..=4)
        .map(|k| {
            let c = continuity_gaps(&section_field(&body, &icosphere(k).unwrap()).unwrap());
            (c.max_gap, c.max_edge_length)
        })
        .collect();
    // Gaps shrink with the mesh and stay proportional to the edge length.
    for w in gaps.windows(2) {
        assert!(w[1].0 < 0.75 * w[0].0, "{gaps:?}");
    }
    assert!(gaps.iter().all(|&(g, h)| g <= h), "{gaps:?}");
}

#[test]
fn shifted_ball_centred_section_is_equatorial() {
    let p = bodies::shifted_ball(Vec3::new(0.0, 0.0, 0.3), 3).unwrap();
    let r = find_centered_section(&p, 3).unwrap();
    assert!(r.theta.z.abs() > 1.0 - 1e-6);
    let (sec, _) = central_section(&p, r.theta).unwrap();
    assert!(centroid(&sec).norm() < 1e-6);
}
