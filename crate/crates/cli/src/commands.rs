use serde_json::{json, Value};
use stabgeom::convex2d::{binet_legendre_ellipse, ConvexPolygon};
use stabgeom::isometry::{
    cluster_count_curve, iso_profile, near_euclidean_certificate, stable_window_search,
    StabilityParams, StepCurve,
};
use stabgeom::metrics::{
    constants_table, d_bl, d_bm_affine, d_bm_linear, d_bm_to_disc, vnj_constant,
};
use stabgeom::sections3d::{
    binet_legendre_3d, central_section, find_centered_section, global_ball_deviation,
    one_center_report, ConvexPolytope3,
};
use stabgeom::spherefield::{icosphere, scaling_experiment, Family};
use stabgeom::{Mat2, Mat3, Vec3};

use crate::body::Body;
use crate::params::{EmbeddedBody, Params, DEFAULT_GRID, DEFAULT_SUBDIV};
use crate::report::{num, opt_num, Table};
use crate::svg::{CurveSpec, ScatterPlot};
use crate::CliError;

/// Subcommands that compute something (everything except `replay`).
pub const COMMANDS: [&str; 12] = [
    "constants",
    "bm",
    "bl",
    "vnj",
    "blellipsoid",
    "isoprofile",
    "certificate",
    "stablewindow",
    "section",
    "centeredsection",
    "onecenter",
    "fieldexp",
];

/// What a command produced. `failure` is set for errors and for failed
/// assertions; in the latter case `results` still holds the computed data.
#[derive(Debug)]
pub struct Outcome {
    pub results: Value,
    pub table: Table,
    pub plot: Option<ScatterPlot>,
    pub failure: Option<CliError>,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        self.failure.as_ref().map_or(0, CliError::exit_code)
    }
}

struct Computed {
    results: Value,
    table: Table,
    plot: Option<ScatterPlot>,
    assertion: Option<String>,
}

impl Computed {
    fn new(results: Value, table: Table) -> Self {
        Computed {
            results,
            table,
            plot: None,
            assertion: None,
        }
    }
}

/// Runs `command` on fully resolved parameters. Pure apart from the
/// parallel inner loops, so equal parameters give equal results.
pub fn execute(command: &str, p: &Params) -> Outcome {
    let r = match command {
        "constants" => constants(p),
        "bm" => bm(p),
        "bl" => bl(p),
        "vnj" => vnj(p),
        "blellipsoid" => blellipsoid(p),
        "isoprofile" => isoprofile(p),
        "certificate" => certificate(p),
        "stablewindow" => stablewindow(p),
        "section" => section(p),
        "centeredsection" => centeredsection(p),
        "onecenter" => onecenter(p),
        "fieldexp" => fieldexp(p),
        other => Err(CliError::Usage(format!("unknown command '{other}'"))),
    };
    match r {
        Ok(mut c) => {
            let failure = c.assertion.take().map(|msg| {
                if let Value::Object(m) = &mut c.results {
                    m.insert("assertion_failed".into(), Value::String(msg.clone()));
                }
                CliError::Assertion(msg)
            });
            Outcome {
                results: c.results,
                table: c.table,
                plot: c.plot,
                failure,
            }
        }
        Err(e) => error_outcome(e),
    }
}

pub fn error_outcome(e: CliError) -> Outcome {
    let mut table = Table::new(["error_kind", "message"]);
    table.push(vec![e.kind().into(), e.to_string()]);
    Outcome {
        results: json!({ "error": { "kind": e.kind(), "message": e.to_string() } }),
        table,
        plot: None,
        failure: Some(e),
    }
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("library types serialize")
}

fn body(e: &Option<EmbeddedBody>, flag: &str) -> Result<Body, CliError> {
    let e = e
        .as_ref()
        .ok_or_else(|| CliError::Usage(format!("missing --{flag}")))?;
    let origin = e.path.clone().unwrap_or_else(|| format!("--{flag}"));
    e.body.to_body(&origin)
}

fn polygon(e: &Option<EmbeddedBody>, flag: &str) -> Result<ConvexPolygon, CliError> {
    match body(e, flag)? {
        Body::Polygon(p) => Ok(p),
        Body::Polytope(_) => Err(CliError::Usage(format!("--{flag} must be a 2D body"))),
    }
}

fn family(p: &Params) -> Result<Family, CliError> {
    let name = p
        .family
        .as_deref()
        .ok_or_else(|| CliError::Usage("missing --family".into()))?;
    Ok(name.parse::<Family>()?)
}

/// The 3D body from `--a` or from `--family`/`--t`.
fn solid(p: &Params) -> Result<ConvexPolytope3, CliError> {
    if p.a.is_some() {
        return match body(&p.a, "a")? {
            Body::Polytope(s) => Ok(s),
            Body::Polygon(_) => Err(CliError::Usage("--a must be a 3D body".into())),
        };
    }
    let t = p.t.as_ref().and_then(|t| t.first().copied()).unwrap_or(0.0);
    Ok(family(p)?.polytope(t, p.subdiv.unwrap_or(DEFAULT_SUBDIV))?)
}

fn grid(p: &Params) -> usize {
    p.grid.unwrap_or(DEFAULT_GRID)
}

fn rows2(m: &Mat2) -> [[f64; 2]; 2] {
    [[m[(0, 0)], m[(0, 1)]], [m[(1, 0)], m[(1, 1)]]]
}

fn rows3(m: &Mat3) -> [[f64; 3]; 3] {
    [0, 1, 2].map(|i| [m[(i, 0)], m[(i, 1)], m[(i, 2)]])
}

fn v3(v: Vec3) -> [f64; 3] {
    [v.x, v.y, v.z]
}

fn constants(p: &Params) -> Result<Computed, CliError> {
    let t = constants_table(p.n.unwrap_or(2), p.c.unwrap_or(1.0))?;
    let mut table = Table::new([
        "n",
        "a_n",
        "b_n",
        "b_prime",
        "bhat_n",
        "d_n",
        "c_universal",
        "c_n",
        "a_n_exact",
        "b_n_exact",
        "b_prime_exact",
        "bhat_n_exact",
        "d_n_exact",
    ]);
    let ex = t.exact.clone();
    let e = |f: fn(&stabgeom::metrics::ExactConstants) -> &String| {
        ex.as_ref().map(|x| f(x).clone()).unwrap_or_default()
    };
    table.push(vec![
        t.n.to_string(),
        num(t.a_n),
        num(t.b_n),
        num(t.b_prime),
        num(t.bhat_n),
        num(t.d_n),
        num(t.c_universal),
        num(t.c_n),
        e(|x| &x.a_n),
        e(|x| &x.b_n),
        e(|x| &x.b_prime),
        e(|x| &x.bhat_n),
        e(|x| &x.d_n),
    ]);
    Ok(Computed::new(to_value(&t), table))
}

const ESTIMATE_COLUMNS: [&str; 11] = [
    "kind",
    "value",
    "grid_size",
    "is_upper_bound",
    "w_xx",
    "w_xy",
    "w_yx",
    "w_yy",
    "w_tx",
    "w_ty",
    "replayed",
];

fn estimate_row(e: &stabgeom::metrics::DistanceEstimate, replayed: Option<f64>) -> Vec<String> {
    let w = &e.witness;
    vec![
        to_value(&e.kind).as_str().unwrap_or_default().to_string(),
        num(e.value),
        e.grid_size.to_string(),
        e.is_upper_bound.to_string(),
        num(w.linear[0][0]),
        num(w.linear[0][1]),
        num(w.linear[1][0]),
        num(w.linear[1][1]),
        num(w.translation[0]),
        num(w.translation[1]),
        opt_num(replayed),
    ]
}

fn bm(p: &Params) -> Result<Computed, CliError> {
    let k = polygon(&p.a, "a")?;
    let kind = p.kind.as_deref().unwrap_or("affine");
    let (est, replayed) = match kind {
        "disc" => (d_bm_to_disc(&k)?, None),
        "affine" | "linear" => {
            let l = polygon(&p.b, "b")?;
            let est = if kind == "affine" {
                d_bm_affine(&k, &l, grid(p))?
            } else {
                d_bm_linear(&k, &l, grid(p))?
            };
            let r = est.replay(&k, &l)?;
            (est, Some(r))
        }
        other => {
            return Err(CliError::Usage(format!(
                "unknown --kind '{other}' (affine, linear, disc)"
            )))
        }
    };
    let mut table = Table::new(ESTIMATE_COLUMNS);
    table.push(estimate_row(&est, replayed));
    let mut v = to_value(&est);
    v["replayed"] = to_value(&replayed);
    Ok(Computed::new(v, table))
}

fn bl(p: &Params) -> Result<Computed, CliError> {
    let k = polygon(&p.a, "a")?;
    let l = polygon(&p.b, "b")?;
    let est = d_bl(&k, &l, grid(p))?;
    let replayed = est.replay(&k, &l)?;
    let bm = d_bm_affine(&k, &l, grid(p))?.value;
    let c2 = constants_table(2, 1.0)?;
    let lower = c2.a_n * (bm - 1.0);
    let upper = c2.bhat_n * (bm - 1.0);
    let holds = lower <= est.value && est.value <= upper;
    let mut v = to_value(&est);
    v["replayed"] = to_value(&replayed);
    v["bm_affine"] = to_value(&bm);
    v["band_lower"] = to_value(&lower);
    v["band_upper"] = to_value(&upper);
    v["band_holds"] = Value::Bool(holds);
    let mut cols: Vec<&str> = ESTIMATE_COLUMNS.to_vec();
    cols.extend(["bm_affine", "band_lower", "band_upper", "band_holds"]);
    let mut table = Table::new(cols);
    let mut row = estimate_row(&est, Some(replayed));
    row.extend([num(bm), num(lower), num(upper), holds.to_string()]);
    table.push(row);
    let mut c = Computed::new(v, table);
    if !holds {
        c.assertion = Some(format!(
            "equivalence band {lower} <= {} <= {upper} fails",
            est.value
        ));
    }
    Ok(c)
}

fn vnj(p: &Params) -> Result<Computed, CliError> {
    let k = polygon(&p.a, "a")?;
    let value = vnj_constant(&k, grid(p))?;
    let mut table = Table::new(["value", "grid_size"]);
    table.push(vec![num(value), grid(p).to_string()]);
    Ok(Computed::new(
        json!({ "value": value, "grid_size": grid(p) }),
        table,
    ))
}

fn blellipsoid(p: &Params) -> Result<Computed, CliError> {
    let b = if p.a.is_some() {
        body(&p.a, "a")?
    } else {
        Body::Polytope(solid(p)?)
    };
    let (center, shape, axes): (Vec<f64>, Vec<Vec<f64>>, Vec<f64>) = match &b {
        Body::Polygon(k) => {
            let e = binet_legendre_ellipse(k);
            let (a1, a2) = e.semi_axes();
            (
                vec![e.center().x, e.center().y],
                rows2(&e.shape()).map(|r| r.to_vec()).to_vec(),
                vec![a1, a2],
            )
        }
        Body::Polytope(s) => {
            let e = binet_legendre_3d(s);
            (
                v3(e.center()).to_vec(),
                rows3(&e.shape()).map(|r| r.to_vec()).to_vec(),
                e.semi_axes().to_vec(),
            )
        }
    };
    let dim = b.dim();
    let mut header = vec!["dim".to_string()];
    let mut row = vec![dim.to_string()];
    for (i, c) in center.iter().enumerate() {
        header.push(format!("center_{i}"));
        row.push(num(*c));
    }
    for (i, r) in shape.iter().enumerate() {
        for (j, x) in r.iter().enumerate() {
            header.push(format!("shape_{i}{j}"));
            row.push(num(*x));
        }
    }
    for (i, a) in axes.iter().enumerate() {
        header.push(format!("semi_axis_{i}"));
        row.push(num(*a));
    }
    let mut table = Table::new(header);
    table.push(row);
    Ok(Computed::new(
        json!({ "dim": dim, "center": center, "shape": shape, "semi_axes": axes }),
        table,
    ))
}

fn isoprofile(p: &Params) -> Result<Computed, CliError> {
    let k = polygon(&p.a, "a")?;
    let prof = iso_profile(&k, grid(p))?;
    let mut table = Table::new(["index", "angle", "dev_rot", "dev_refl"]);
    let mut rows = Vec::with_capacity(prof.grid_size);
    for i in 0..prof.grid_size {
        let (a, r, f) = (prof.angle(i), prof.dev_rot[i], prof.dev_refl[i]);
        table.push(vec![i.to_string(), num(a), num(r), num(f)]);
        rows.push(json!({ "index": i, "angle": a, "dev_rot": r, "dev_refl": f }));
    }
    let min_pos = |d: &[f64]| {
        d.iter()
            .copied()
            .filter(|&x| x > stabgeom::TAU_NUM)
            .fold(f64::INFINITY, f64::min)
    };
    let results = json!({
        "grid_size": prof.grid_size,
        "max_dev": prof.max_dev(),
        "min_positive_dev_rot": to_value(&min_pos(&prof.dev_rot)),
        "min_positive_dev_refl": to_value(&min_pos(&prof.dev_refl)),
        "rows": rows,
    });
    let mut c = Computed::new(results, table);
    c.plot = Some(ScatterPlot {
        title: "Rotational deviation profile".into(),
        x_label: "rotation angle".into(),
        y_label: "Hausdorff deviation".into(),
        points: (0..prof.grid_size)
            .map(|i| (prof.angle(i), prof.dev_rot[i]))
            .collect(),
        curve: None,
    });
    Ok(c)
}

fn certificate(p: &Params) -> Result<Computed, CliError> {
    let k = polygon(&p.a, "a")?;
    let eps = p
        .eps
        .ok_or_else(|| CliError::Usage("certificate requires --eps".into()))?;
    let r = near_euclidean_certificate(&k, eps, grid(p))?;
    let mut table = Table::new([
        "eps",
        "alpha",
        "beta",
        "grid_size",
        "fires",
        "max_gap",
        "verified_bm",
        "sound",
    ]);
    table.push(vec![
        num(r.eps),
        num(r.alpha),
        num(r.beta),
        r.grid_size.to_string(),
        r.fires.to_string(),
        num(r.max_gap),
        opt_num(r.verified_bm),
        r.sound.map(|s| s.to_string()).unwrap_or_default(),
    ]);
    let mut c = Computed::new(to_value(&r), table);
    if r.sound == Some(false) {
        c.assertion = Some(format!(
            "certificate fired but verified d_BM = {:?} exceeds 1 + eps",
            r.verified_bm
        ));
    }
    Ok(c)
}

fn stablewindow(p: &Params) -> Result<Computed, CliError> {
    let eps = p
        .eps
        .ok_or_else(|| CliError::Usage("stablewindow requires --eps".into()))?;
    let dp = p
        .delta_prime
        .ok_or_else(|| CliError::Usage("stablewindow requires --delta-prime".into()))?;
    let params = StabilityParams::new(eps, dp)?;
    params.check()?;
    let curve = match &p.curve {
        Some(samples) => StepCurve::new(samples.clone())?,
        None => {
            let k = polygon(&p.a, "a")?;
            let prof = iso_profile(&k, grid(p))?;
            let n = p.samples.unwrap_or(crate::params::DEFAULT_SAMPLES).max(2);
            let alphas: Vec<f64> = (0..n)
                .map(|i| params.alpha3 * i as f64 / (n - 1) as f64)
                .collect();
            StepCurve::from_counts(&cluster_count_curve(&prof, params.beta1, &alphas))?
        }
    };
    let gamma0 = stable_window_search(&curve, &params)?;
    let hi = gamma0 + 3.0 * dp;
    let count = curve.count(gamma0);
    let mut table = Table::new([
        "gamma0",
        "window_end",
        "count",
        "alpha3",
        "b0",
        "beta1",
        "delta_prime",
    ]);
    table.push(vec![
        num(gamma0),
        num(hi),
        count.to_string(),
        num(params.alpha3),
        params.b0.to_string(),
        num(params.beta1),
        num(dp),
    ]);
    let results = json!({
        "gamma0": gamma0,
        "window": [gamma0, hi],
        "count": count,
        "jumps": curve.jumps(),
        "samples": curve.samples(),
        "params": to_value(&params),
    });
    Ok(Computed::new(results, table))
}

fn section(p: &Params) -> Result<Computed, CliError> {
    let s = solid(p)?;
    let th = p
        .theta
        .ok_or_else(|| CliError::Usage("section requires --theta".into()))?;
    let (poly, frame) = central_section(&s, Vec3::new(th[0], th[1], th[2]))?;
    let mut table = Table::new(["u", "v", "x", "y", "z"]);
    let mut verts = Vec::new();
    for q in poly.vertices() {
        let x = frame.to_space(*q);
        table.push(vec![num(q.x), num(q.y), num(x.x), num(x.y), num(x.z)]);
        verts.push(json!({ "uv": [q.x, q.y], "xyz": v3(x) }));
    }
    let results = json!({ "frame": to_value(&frame), "area": poly.area(), "vertices": verts });
    Ok(Computed::new(results, table))
}

fn centeredsection(p: &Params) -> Result<Computed, CliError> {
    let s = solid(p)?;
    let r = find_centered_section(&s, p.subdiv.unwrap_or(DEFAULT_SUBDIV))?;
    let mut table = Table::new([
        "theta_x",
        "theta_y",
        "theta_z",
        "residual",
        "grid_residual",
        "iterations",
    ]);
    table.push(vec![
        num(r.theta.x),
        num(r.theta.y),
        num(r.theta.z),
        num(r.residual),
        num(r.grid_residual),
        r.iterations.to_string(),
    ]);
    Ok(Computed::new(to_value(&r), table))
}

fn onecenter(p: &Params) -> Result<Computed, CliError> {
    let s = solid(p)?;
    let r = one_center_report(&s, p.subdiv.unwrap_or(DEFAULT_SUBDIV))?;
    let c3 = constants_table(3, p.c.unwrap_or(1.0))?.c_n;
    let bound = c3 * r.eps_sections.max(0.0).sqrt();
    let holds = r.eps_global <= bound;
    let mut v = to_value(&r);
    v["global_ball_deviation"] = to_value(&global_ball_deviation(&s));
    v["c_n"] = to_value(&c3);
    v["bound"] = to_value(&bound);
    v["bound_holds"] = Value::Bool(holds);
    let mut table = Table::new([
        "eps_sections",
        "eps_global",
        "ratio",
        "c_n",
        "bound",
        "bound_holds",
    ]);
    table.push(vec![
        num(r.eps_sections),
        num(r.eps_global),
        opt_num(r.ratio),
        num(c3),
        num(bound),
        holds.to_string(),
    ]);
    let mut c = Computed::new(v, table);
    if !holds {
        c.assertion = Some(format!(
            "eps_global {} exceeds C_3 sqrt(eps_sections) = {bound}",
            r.eps_global
        ));
    }
    Ok(c)
}

fn fieldexp(p: &Params) -> Result<Computed, CliError> {
    let fam = family(p)?;
    let ts = p.t.clone().unwrap_or_default();
    if ts.is_empty() {
        return Err(CliError::Usage(
            "fieldexp needs at least one --t value".into(),
        ));
    }
    let mesh = icosphere(p.subdiv.unwrap_or(DEFAULT_SUBDIV))?;
    let rep = scaling_experiment(
        fam,
        &ts,
        &mesh,
        p.pairs.unwrap_or(crate::params::DEFAULT_PAIRS),
        p.seed.unwrap_or(crate::params::DEFAULT_SEED),
        grid(p),
    )?;
    let c = p.c.unwrap_or(1.0);
    let mut table = Table::new([
        "t",
        "delta",
        "eps",
        "anchor_bound",
        "eps_over_cbrt_delta",
        "bound_c",
    ]);
    let mut rows = Vec::new();
    for r in &rep.rows {
        let ratio = (r.delta > 0.0).then(|| r.eps / r.delta.cbrt());
        let bound = c * r.delta.max(0.0).cbrt();
        table.push(vec![
            num(r.t),
            num(r.delta),
            num(r.eps),
            num(r.anchor_bound),
            opt_num(ratio),
            num(bound),
        ]);
        rows.push(json!({
            "t": r.t, "delta": r.delta, "eps": r.eps, "anchor_bound": r.anchor_bound,
            "eps_over_cbrt_delta": ratio, "bound_c": bound,
        }));
    }
    let mut v = to_value(&rep);
    v["rows"] = Value::Array(rows);
    v["c_universal"] = to_value(&c);
    let mut out = Computed::new(v, table);
    out.plot = Some(ScatterPlot {
        title: format!("{fam} section field: ellipse deviation vs monochromaticity"),
        x_label: "delta".into(),
        y_label: "eps".into(),
        points: rep.rows.iter().map(|r| (r.delta, r.eps)).collect(),
        curve: Some(CurveSpec {
            coefficient: rep.c_fit,
            exponent: 1.0 / 3.0,
            label: format!("c_fit * delta^(1/3), c_fit = {:.4}", rep.c_fit),
        }),
    });
    if !rep.self_consistent {
        out.assertion = Some("eps <= c_fit * delta^(1/3) fails on some row".into());
    }
    Ok(out)
}
