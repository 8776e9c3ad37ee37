//! Minimal deterministic SVG scatter plots.

use std::fmt::Write as _;
use std::path::Path;

use crate::CliError;

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 600.0;
const LEFT: f64 = 90.0;
const RIGHT: f64 = 770.0;
const TOP: f64 = 50.0;
const BOTTOM: f64 = 520.0;
const CURVE_SAMPLES: usize = 200;

/// Reference curve `y = coefficient · x^exponent`.
#[derive(Debug, Clone, PartialEq)]
pub struct CurveSpec {
    pub coefficient: f64,
    pub exponent: f64,
    pub label: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScatterPlot {
    pub title: String,
    pub x_label: String,
    pub y_label: String,
    pub points: Vec<(f64, f64)>,
    pub curve: Option<CurveSpec>,
}

#[derive(Debug, Clone, Copy)]
struct Axis {
    log: bool,
    lo: f64,
    hi: f64,
    pix_lo: f64,
    pix_hi: f64,
}

impl Axis {
    fn new(values: &[f64], log: bool, pix_lo: f64, pix_hi: f64) -> Self {
        let t: Vec<f64> = values
            .iter()
            .map(|&v| if log { v.log10() } else { v })
            .collect();
        let mut lo = t.iter().copied().fold(f64::INFINITY, f64::min);
        let mut hi = t.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        if hi - lo <= 1e-12 * (1.0 + lo.abs()) {
            let pad = if log {
                0.5
            } else if lo.abs() > 0.0 {
                0.1 * lo.abs()
            } else {
                1.0
            };
            lo -= pad;
            hi += pad;
        } else {
            let pad = 0.05 * (hi - lo);
            lo -= pad;
            hi += pad;
        }
        Axis {
            log,
            lo,
            hi,
            pix_lo,
            pix_hi,
        }
    }

    fn to_axis(&self, v: f64) -> f64 {
        if self.log {
            v.log10()
        } else {
            v
        }
    }

    fn pixel(&self, v: f64) -> f64 {
        self.pix_lo
            + (self.to_axis(v) - self.lo) / (self.hi - self.lo) * (self.pix_hi - self.pix_lo)
    }

    /// Tick positions in data units.
    fn ticks(&self) -> Vec<f64> {
        if self.log {
            let first = self.lo.ceil() as i32;
            let last = self.hi.floor() as i32;
            if last - first >= 1 {
                return (first..=last).map(|e| 10f64.powi(e)).collect();
            }
            return (0..5)
                .map(|k| 10f64.powf(self.lo + (self.hi - self.lo) * (k as f64 + 0.5) / 5.0))
                .collect();
        }
        (0..=4)
            .map(|k| self.lo + (self.hi - self.lo) * k as f64 / 4.0)
            .collect()
    }
}

fn label(v: f64) -> String {
    let a = v.abs();
    if a != 0.0 && !(1e-2..1e4).contains(&a) {
        format!("{v:.2e}")
    } else {
        format!("{v:.3}")
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

/// Renders the plot. Log–log axes when every point is strictly positive,
/// linear axes otherwise. Identical input gives identical bytes.
pub fn render_svg_scatter(plot: &ScatterPlot) -> Result<String, CliError> {
    if plot.points.is_empty() {
        return Err(CliError::Usage(
            "scatter plot needs at least one row".into(),
        ));
    }
    if plot
        .points
        .iter()
        .any(|p| !p.0.is_finite() || !p.1.is_finite())
    {
        return Err(CliError::Usage("scatter plot rows must be finite".into()));
    }
    let log = plot.points.iter().all(|p| p.0 > 0.0 && p.1 > 0.0);
    let xs: Vec<f64> = plot.points.iter().map(|p| p.0).collect();
    let mut ys: Vec<f64> = plot.points.iter().map(|p| p.1).collect();
    let x_axis = Axis::new(&xs, log, LEFT, RIGHT);

    let curve_pts: Vec<(f64, f64)> = match &plot.curve {
        Some(c) => (0..=CURVE_SAMPLES)
            .map(|k| {
                let a = x_axis.lo + (x_axis.hi - x_axis.lo) * k as f64 / CURVE_SAMPLES as f64;
                let x = if log { 10f64.powf(a) } else { a };
                (x, c.coefficient * x.abs().powf(c.exponent))
            })
            .filter(|p| p.1.is_finite() && (!log || p.1 > 0.0))
            .collect(),
        None => Vec::new(),
    };
    // Only the curve over the data range widens the y axis.
    let (xmin, xmax) = xs
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), &x| {
            (a.min(x), b.max(x))
        });
    if let Some(c) = &plot.curve {
        for x in [xmin, xmax] {
            let y = c.coefficient * x.abs().powf(c.exponent);
            if y.is_finite() && (!log || y > 0.0) {
                ys.push(y);
            }
        }
    }
    let y_axis = Axis::new(&ys, log, BOTTOM, TOP);

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(
        s,
        r#"<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#
    );
    let _ = writeln!(
        s,
        r#"<defs><clipPath id="plot-area"><rect x="{LEFT}" y="{TOP}" width="{:.2}" height="{:.2}"/></clipPath></defs>"#,
        RIGHT - LEFT,
        BOTTOM - TOP
    );
    let _ = writeln!(
        s,
        r#"<text x="{:.2}" y="28" text-anchor="middle" font-size="16">{}</text>"#,
        WIDTH / 2.0,
        escape(&plot.title)
    );
    let _ = writeln!(
        s,
        r#"<rect x="{LEFT}" y="{TOP}" width="{:.2}" height="{:.2}" fill="none" stroke="black"/>"#,
        RIGHT - LEFT,
        BOTTOM - TOP
    );
    for t in x_axis.ticks() {
        let px = x_axis.pixel(t);
        let _ = writeln!(
            s,
            r##"<line x1="{px:.2}" y1="{TOP}" x2="{px:.2}" y2="{BOTTOM}" stroke="#dddddd"/>"##
        );
        let _ = writeln!(
            s,
            r#"<text x="{px:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
            BOTTOM + 18.0,
            label(t)
        );
    }
    for t in y_axis.ticks() {
        let py = y_axis.pixel(t);
        let _ = writeln!(
            s,
            r##"<line x1="{LEFT}" y1="{py:.2}" x2="{RIGHT}" y2="{py:.2}" stroke="#dddddd"/>"##
        );
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="end">{}</text>"#,
            LEFT - 6.0,
            py + 4.0,
            label(t)
        );
    }
    let scale = if log { " (log)" } else { "" };
    let _ = writeln!(
        s,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">{}{scale}</text>"#,
        (LEFT + RIGHT) / 2.0,
        HEIGHT - 30.0,
        escape(&plot.x_label)
    );
    let _ = writeln!(
        s,
        r#"<text x="24" y="{:.2}" text-anchor="middle" transform="rotate(-90 24 {:.2})">{}{scale}</text>"#,
        (TOP + BOTTOM) / 2.0,
        (TOP + BOTTOM) / 2.0,
        escape(&plot.y_label)
    );
    if curve_pts.len() >= 2 {
        let pts: Vec<String> = curve_pts
            .iter()
            .map(|&(x, y)| format!("{:.2},{:.2}", x_axis.pixel(x), y_axis.pixel(y)))
            .collect();
        let _ = writeln!(
            s,
            r##"<polyline points="{}" fill="none" stroke="#d62728" stroke-width="1.5" clip-path="url(#plot-area)"/>"##,
            pts.join(" ")
        );
    }
    for &(x, y) in &plot.points {
        let _ = writeln!(
            s,
            r##"<circle cx="{:.2}" cy="{:.2}" r="4" fill="#1f77b4"/>"##,
            x_axis.pixel(x),
            y_axis.pixel(y)
        );
    }
    // Legend.
    let lx = LEFT + 12.0;
    let ly = TOP + 16.0;
    let _ = writeln!(
        s,
        r##"<circle cx="{:.2}" cy="{:.2}" r="4" fill="#1f77b4"/>"##,
        lx + 8.0,
        ly - 4.0
    );
    let _ = writeln!(
        s,
        r#"<text x="{:.2}" y="{ly:.2}">samples ({})</text>"#,
        lx + 22.0,
        plot.points.len()
    );
    if let Some(c) = &plot.curve {
        let y2 = ly + 18.0;
        let _ = writeln!(
            s,
            r##"<line x1="{lx:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="#d62728" stroke-width="1.5"/>"##,
            y2 - 4.0,
            lx + 16.0,
            y2 - 4.0
        );
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{y2:.2}">{}</text>"#,
            lx + 22.0,
            escape(&c.label)
        );
    }
    s.push_str("</svg>\n");
    Ok(s)
}

/// Renders and writes the plot to `path`.
pub fn emit_svg_scatter(plot: &ScatterPlot, path: &Path) -> Result<(), CliError> {
    let svg = render_svg_scatter(plot)?;
    std::fs::write(path, svg).map_err(|e| CliError::io(path, e))
}
