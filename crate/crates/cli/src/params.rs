use std::path::{Path, PathBuf};

use clap::{Args, ValueEnum};
use serde::{Deserialize, Serialize};
use stabgeom::{TAU_GEOM, TAU_NUM};

use crate::body::BodyFile;
use crate::CliError;

pub const DEFAULT_GRID: usize = 2048;
pub const DEFAULT_SUBDIV: u32 = 3;
pub const DEFAULT_SEED: u64 = 0x5EED;
pub const DEFAULT_PAIRS: usize = 2000;
pub const DEFAULT_SAMPLES: usize = 64;
pub const DEFAULT_FIELD_T: [f64; 4] = [0.05, 0.1, 0.2, 0.4];

/// Input body stored inside a report so a run can be replayed without the
/// original file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EmbeddedBody {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub path: Option<String>,
    pub body: BodyFile,
}

/// Fully resolved parameters of one run. Only fields used by the command
/// are set; defaults are written out explicitly.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<EmbeddedBody>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<EmbeddedBody>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub grid: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eps: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta_prime: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subdiv: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pairs: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theta: Option<[f64; 3]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub curve: Option<Vec<(f64, usize)>>,
    /// Library tolerances in effect; recorded, not tunable.
    pub tau_geom: f64,
    pub tau_num: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Debug, Clone, Default, Args)]
pub struct OutputFlags {
    /// Write an SVG scatter plot (fieldexp, isoprofile).
    #[arg(long)]
    pub plot: Option<PathBuf>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

fn parse_seed(s: &str) -> Result<u64, String> {
    let r = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => s.parse(),
    };
    r.map_err(|e| e.to_string())
}

#[derive(Debug, Clone, Default, Args)]
pub struct Flags {
    /// First body file (JSON).
    #[arg(long)]
    pub a: Option<PathBuf>,
    /// Second body file (JSON).
    #[arg(long)]
    pub b: Option<PathBuf>,
    /// Dimension for `constants`.
    #[arg(long)]
    pub n: Option<u32>,
    /// Angle grid size per O(2) component.
    #[arg(long)]
    pub grid: Option<usize>,
    #[arg(long, allow_negative_numbers = true)]
    pub eps: Option<f64>,
    #[arg(long = "delta-prime", allow_negative_numbers = true)]
    pub delta_prime: Option<f64>,
    /// Icosphere subdivision level.
    #[arg(long)]
    pub subdiv: Option<u32>,
    /// Family parameter(s), comma separated.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub t: Vec<f64>,
    #[arg(long)]
    pub pairs: Option<usize>,
    /// RNG seed, decimal or 0x-prefixed hex.
    #[arg(long, value_parser = parse_seed)]
    pub seed: Option<u64>,
    /// Universal constant multiplying reported bounds.
    #[arg(long, allow_negative_numbers = true)]
    pub c: Option<f64>,
    /// Body family: ball, cube, ellipsoid, shifted-ball, ball-cube.
    #[arg(long)]
    pub family: Option<String>,
    /// Plane normal for `section`, as x,y,z.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub theta: Vec<f64>,
    /// Distance kind for `bm`: affine, linear, disc.
    #[arg(long)]
    pub kind: Option<String>,
    /// Number of alpha samples for `stablewindow` on a body.
    #[arg(long)]
    pub samples: Option<usize>,
    /// Step curve for `stablewindow`: JSON list of [alpha, count].
    #[arg(long)]
    pub curve: Option<PathBuf>,
    #[command(flatten)]
    pub output: OutputFlags,
}

fn embed(path: &Path) -> Result<EmbeddedBody, CliError> {
    let body = BodyFile::read(path)?;
    body.to_body(&path.display().to_string())?;
    Ok(EmbeddedBody {
        path: Some(path.display().to_string()),
        body,
    })
}

fn need<T: Clone>(v: &Option<T>, flag: &str, cmd: &str) -> Result<T, CliError> {
    v.clone()
        .ok_or_else(|| CliError::Usage(format!("{cmd} requires --{flag}")))
}

impl Flags {
    /// Resolves flags into the parameter set of `cmd`, loading bodies and
    /// filling defaults.
    pub fn resolve(&self, cmd: &str) -> Result<Params, CliError> {
        let mut p = Params {
            tau_geom: TAU_GEOM,
            tau_num: TAU_NUM,
            ..Params::default()
        };
        let body_a = || -> Result<EmbeddedBody, CliError> { embed(&need(&self.a, "a", cmd)?) };
        let grid = Some(self.grid.unwrap_or(DEFAULT_GRID));
        let solid = |p: &mut Params| -> Result<(), CliError> {
            if let Some(path) = &self.a {
                p.a = Some(embed(path)?);
                if self.family.is_some() {
                    return Err(CliError::Usage(format!(
                        "{cmd}: give either --a or --family, not both"
                    )));
                }
            } else {
                let fam = need(&self.family, "a or --family", cmd)?;
                p.family = Some(fam);
                p.t = Some(match self.t.as_slice() {
                    [] => vec![0.0],
                    [t] => vec![*t],
                    _ => return Err(CliError::Usage(format!("{cmd} takes a single --t value"))),
                });
                p.subdiv = Some(self.subdiv.unwrap_or(DEFAULT_SUBDIV));
            }
            Ok(())
        };
        match cmd {
            "constants" => {
                p.n = Some(self.n.unwrap_or(2));
                p.c = Some(self.c.unwrap_or(1.0));
            }
            "bm" => {
                let kind = self.kind.clone().unwrap_or_else(|| "affine".into());
                p.a = Some(body_a()?);
                if kind != "disc" {
                    p.b = Some(embed(&need(&self.b, "b", cmd)?)?);
                    p.grid = grid;
                }
                p.kind = Some(kind);
            }
            "bl" => {
                p.a = Some(body_a()?);
                p.b = Some(embed(&need(&self.b, "b", cmd)?)?);
                p.grid = grid;
            }
            "vnj" | "isoprofile" => {
                p.a = Some(body_a()?);
                p.grid = grid;
            }
            "certificate" => {
                p.a = Some(body_a()?);
                p.grid = grid;
                p.eps = Some(need(&self.eps, "eps", cmd)?);
            }
            "stablewindow" => {
                p.eps = Some(need(&self.eps, "eps", cmd)?);
                p.delta_prime = Some(need(&self.delta_prime, "delta-prime", cmd)?);
                match (&self.curve, &self.a) {
                    (Some(path), None) => {
                        let text =
                            std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
                        let curve: Vec<(f64, usize)> =
                            serde_json::from_str(&text).map_err(|e| CliError::Parse {
                                path: path.display().to_string(),
                                line: e.line(),
                                column: e.column(),
                                message: e.to_string(),
                            })?;
                        p.curve = Some(curve);
                    }
                    (None, Some(_)) => {
                        p.a = Some(body_a()?);
                        p.grid = grid;
                        p.samples = Some(self.samples.unwrap_or(DEFAULT_SAMPLES));
                    }
                    _ => {
                        return Err(CliError::Usage(
                            "stablewindow requires exactly one of --a, --curve".into(),
                        ))
                    }
                }
            }
            "blellipsoid" => {
                if self.a.is_some() {
                    p.a = Some(body_a()?);
                } else {
                    solid(&mut p)?;
                }
            }
            "section" => {
                solid(&mut p)?;
                p.theta = Some(match self.theta.as_slice() {
                    [x, y, z] => [*x, *y, *z],
                    _ => return Err(CliError::Usage("section requires --theta x,y,z".into())),
                });
            }
            "centeredsection" | "onecenter" => {
                solid(&mut p)?;
                p.subdiv = Some(self.subdiv.unwrap_or(DEFAULT_SUBDIV));
                if cmd == "onecenter" {
                    p.c = Some(self.c.unwrap_or(1.0));
                }
            }
            "fieldexp" => {
                p.family = Some(self.family.clone().unwrap_or_else(|| "ball-cube".into()));
                p.t = Some(if self.t.is_empty() {
                    DEFAULT_FIELD_T.to_vec()
                } else {
                    self.t.clone()
                });
                p.subdiv = Some(self.subdiv.unwrap_or(DEFAULT_SUBDIV));
                p.pairs = Some(self.pairs.unwrap_or(DEFAULT_PAIRS));
                p.seed = Some(self.seed.unwrap_or(DEFAULT_SEED));
                p.grid = grid;
                p.c = Some(self.c.unwrap_or(1.0));
            }
            other => return Err(CliError::Usage(format!("unknown command '{other}'"))),
        }
        Ok(p)
    }
}
