use proptest::prelude::*;
use stabgeom::convex2d::{
    binet_legendre_ellipse, bl_normalize, hausdorff_euclidean, make_polygon, minkowski_symmetrize,
    shapes, ConvexPolygon, GaugeForm,
};
use stabgeom::isometry::{iso_profile, sublevel_arcs, Component};
use stabgeom::metrics::{d_bl, d_bm_affine, d_bm_linear, vnj_constant};
use stabgeom::{Mat2, Transform2, Vec2};

fn polygon() -> impl Strategy<Value = ConvexPolygon> {
    prop::collection::vec((-2.0f64..2.0, -2.0f64..2.0), 3..24).prop_filter_map(
        "degenerate",
        |pts| {
            let pts: Vec<Vec2> = pts.into_iter().map(|(x, y)| Vec2::new(x, y)).collect();
            make_polygon(&pts).ok().filter(|p| p.area() > 0.1)
        },
    )
}

fn symmetric_polygon() -> impl Strategy<Value = ConvexPolygon> {
    prop::collection::vec((-2.0f64..2.0, -2.0f64..2.0), 2..12).prop_filter_map(
        "degenerate",
        |pts| {
            let pts: Vec<Vec2> = pts
                .into_iter()
                .flat_map(|(x, y)| [Vec2::new(x, y), Vec2::new(-x, -y)])
                .collect();
            make_polygon(&pts).ok().filter(|p| p.area() > 0.1)
        },
    )
}

fn affine() -> impl Strategy<Value = Transform2> {
    (
        (-2.0f64..2.0, -2.0f64..2.0, -2.0f64..2.0, -2.0f64..2.0),
        (-3.0f64..3.0, -3.0f64..3.0),
    )
        .prop_filter_map("near-singular", |((a, b, c, d), (x, y))| {
            let m = Mat2::new(a, b, c, d);
            (m.determinant().abs() > 0.3).then(|| Transform2::new(m, Vec2::new(x, y)).unwrap())
        })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn bl_ellipse_is_affine_equivariant(k in polygon(), t in affine()) {
        let lhs = binet_legendre_ellipse(&k.transform(&t));
        let rhs = binet_legendre_ellipse(&k).transform(&t);
        prop_assert!(lhs.approx_eq(&rhs, 1e-7 * (1.0 + rhs.shape().amax())));
    }

    #[test]
    fn bl_normalize_gives_unit_disc(k in polygon()) {
        let (kn, t) = bl_normalize(&k);
        let e = binet_legendre_ellipse(&kn);
        prop_assert!(e.approx_eq(&stabgeom::convex2d::Ellipse::disc(Vec2::zeros(), 1.0).unwrap(), 1e-9));
        let back = kn.transform(&t.inverse());
        prop_assert!(hausdorff_euclidean(&back, &k) < 1e-9);
    }

    #[test]
    fn centred_body_satisfies_minus_k_in_2k(k in polygon()) {
        let k = k.centered();
        let g = GaugeForm::new(&k).unwrap();
        for v in k.vertices() {
            prop_assert!(g.gauge(-v) <= 2.0 + 1e-9);
        }
    }

    #[test]
    fn hausdorff_is_a_metric(a in polygon(), b in polygon(), c in polygon()) {
        let ab = hausdorff_euclidean(&a, &b);
        prop_assert!((ab - hausdorff_euclidean(&b, &a)).abs() < 1e-12);
        prop_assert!(hausdorff_euclidean(&a, &a) == 0.0);
        prop_assert!(ab <= hausdorff_euclidean(&a, &c) + hausdorff_euclidean(&c, &b) + 1e-12);
    }

    #[test]
    fn hausdorff_of_translate_is_shift_length(a in polygon(), x in -2.0f64..2.0, y in -2.0f64..2.0) {
        let v = Vec2::new(x, y);
        prop_assert!((hausdorff_euclidean(&a, &a.translate(v)) - v.norm()).abs() < 1e-12);
    }

    #[test]
    fn transform_group_laws(s in affine(), t in affine(), x in -5.0f64..5.0, y in -5.0f64..5.0) {
        let p = Vec2::new(x, y);
        let st = s.compose(&t);
        prop_assert!((st.apply(p) - s.apply(t.apply(p))).norm() < 1e-12 * (1.0 + p.norm()) * 100.0);
        prop_assert!((s.inverse().apply(s.apply(p)) - p).norm() < 1e-9 * (1.0 + p.norm()));
        prop_assert!((st.det() - s.det() * t.det()).abs() < 1e-9 * st.det().abs().max(1.0));
    }

    #[test]
    fn gauge_is_positively_homogeneous(k in polygon(), x in -3.0f64..3.0, y in -3.0f64..3.0, s in 0.1f64..10.0) {
        let k = k.centered();
        let g = GaugeForm::new(&k).unwrap();
        let v = Vec2::new(x, y);
        prop_assert!((g.gauge(v * s) - s * g.gauge(v)).abs() <= 1e-12 * (1.0 + s * g.gauge(v)));
    }

    #[test]
    fn symmetrization_is_symmetric(k in polygon()) {
        let s = minkowski_symmetrize(&k);
        let g = GaugeForm::new(&s).unwrap();
        for v in s.vertices() {
            prop_assert!((g.gauge(-v) - 1.0).abs() < 1e-9);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

    #[test]
    fn bm_witnesses_replay(k in polygon(), l in polygon()) {
        let (k, l) = (k.centered(), l.centered());
        for est in [d_bm_linear(&k, &l, 256).unwrap(), d_bm_affine(&k, &l, 256).unwrap()] {
            prop_assert!(est.value >= 1.0);
            let r = est.replay(&k, &l).unwrap();
            prop_assert!((r - est.value).abs() <= 1e-7 * est.value, "{:?} {} vs {}", est.kind, r, est.value);
        }
    }

    #[test]
    fn bm_is_affine_invariant_within_grid_slack(k in polygon(), l in polygon(), t in affine()) {
        let a = d_bm_affine(&k, &l, 1024).unwrap().value;
        let b = d_bm_affine(&k, &l.transform(&t), 1024).unwrap().value;
        prop_assert!((a - b).abs() <= 2e-2 * a, "{a} vs {b}");
        let c = d_bm_affine(&l, &k, 1024).unwrap().value;
        prop_assert!((a - c).abs() <= 2e-2 * a, "asymmetric {a} vs {c}");
    }

    #[test]
    fn bm_is_submultiplicative_within_grid_slack(k in polygon(), l in polygon(), m in polygon()) {
        let kl = d_bm_affine(&k, &l, 512).unwrap().value;
        let lm = d_bm_affine(&l, &m, 512).unwrap().value;
        let km = d_bm_affine(&k, &m, 512).unwrap().value;
        prop_assert!(km <= kl * lm * 1.02, "{km} > {kl}·{lm}");
    }

    #[test]
    fn linear_bm_refines_with_nested_grids(k in symmetric_polygon(), l in symmetric_polygon()) {
        let coarse = d_bm_linear(&k, &l, 128).unwrap().value;
        let fine = d_bm_linear(&k, &l, 256).unwrap().value;
        prop_assert!(fine <= coarse + 1e-12);
    }

    #[test]
    fn bl_distance_vanishes_on_affine_images(k in polygon(), t in affine()) {
        let d = d_bl(&k, &k.transform(&t), 1024).unwrap().value;
        prop_assert!(d >= 0.0);
        prop_assert!(d < 2e-2, "{d}");
    }

    #[test]
    fn kato_bound(k in symmetric_polygon()) {
        let cnj = vnj_constant(&k, 256).unwrap();
        let bm = d_bm_affine(&k, &shapes::disc(512), 512).unwrap().value;
        prop_assert!(cnj >= 1.0);
        prop_assert!(cnj <= bm * bm * (1.0 + 1e-12), "{cnj} > {bm}^2");
    }

    #[test]
    fn sublevel_sets_grow_with_lambda(k in polygon(), a in 0.0f64..0.5, b in 0.0f64..0.5) {
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        let prof = iso_profile(&k, 256).unwrap();
        let small = sublevel_arcs(&prof, lo);
        let big = sublevel_arcs(&prof, hi);
        for c in Component::BOTH {
            for arc in small.get(c) {
                let mid = arc.midpoint();
                prop_assert!(big.get(c).iter().any(|b| b.contains(mid)));
            }
        }
    }
}
