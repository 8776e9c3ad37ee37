//! Command-line harness for `stabgeom`: body files, subcommand dispatch,
//! JSON/CSV reports and SVG scatter plots.
//!
//! Every report embeds the resolved parameters (including input bodies), so
//! `stabgeom replay --report r.json` can recompute and compare its results.

pub mod body;
pub mod commands;
mod error;
pub mod params;
pub mod report;
pub mod svg;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

pub use body::{parse_body_file, Body, BodyFile};
pub use commands::{execute, Outcome, COMMANDS};
pub use error::CliError;
pub use params::{Flags, Format, OutputFlags, Params};
pub use report::{Provenance, ReportDocument, Table};
pub use svg::{emit_svg_scatter, render_svg_scatter, CurveSpec, ScatterPlot};

#[derive(Debug, Parser)]
#[command(
    name = "stabgeom",
    version,
    about = "Convex-geometry experiments: Banach–Mazur and Binet–Legendre distances, isometry profiles, sections, sphere fields"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Explicit constants a_n, b_n, bhat_n, d_n, C_n.
    Constants(Flags),
    /// Banach–Mazur distance estimate with witness.
    Bm(Flags),
    /// Binet–Legendre distance and the equivalence band.
    Bl(Flags),
    /// Von Neumann–Jordan constant of a symmetric body.
    Vnj(Flags),
    /// Binet–Legendre ellipse or ellipsoid.
    Blellipsoid(Flags),
    /// Deviation profile over O(2).
    Isoprofile(Flags),
    /// Near-Euclidean certificate.
    Certificate(Flags),
    /// Stable-window search on a cluster-count step curve.
    Stablewindow(Flags),
    /// Central section of a 3D body.
    Section(Flags),
    /// Direction whose central section has its centroid at the origin.
    Centeredsection(Flags),
    /// Worst section vs global deviation from the ball.
    Onecenter(Flags),
    /// Section-field scaling experiment over a body family.
    Fieldexp(Flags),
    /// Recompute a report from its embedded parameters and compare.
    Replay(ReplayArgs),
}

#[derive(Debug, Clone, Args)]
pub struct ReplayArgs {
    /// Report file produced by an earlier run (JSON).
    #[arg(long)]
    pub report: PathBuf,
    #[command(flatten)]
    pub output: OutputFlags,
}

impl Command {
    fn split(&self) -> (&'static str, &Flags) {
        match self {
            Command::Constants(f) => ("constants", f),
            Command::Bm(f) => ("bm", f),
            Command::Bl(f) => ("bl", f),
            Command::Vnj(f) => ("vnj", f),
            Command::Blellipsoid(f) => ("blellipsoid", f),
            Command::Isoprofile(f) => ("isoprofile", f),
            Command::Certificate(f) => ("certificate", f),
            Command::Stablewindow(f) => ("stablewindow", f),
            Command::Section(f) => ("section", f),
            Command::Centeredsection(f) => ("centeredsection", f),
            Command::Onecenter(f) => ("onecenter", f),
            Command::Fieldexp(f) => ("fieldexp", f),
            Command::Replay(_) => unreachable!("replay is dispatched separately"),
        }
    }
}

/// Runs a command and builds its report.
pub fn run_command(name: &str, params: Params) -> (ReportDocument, Outcome) {
    let outcome = execute(name, &params);
    let doc = ReportDocument {
        command: name.to_string(),
        parameters: params,
        results: outcome.results.clone(),
        exit_code: outcome.exit_code(),
        provenance: Provenance::now(),
    };
    (doc, outcome)
}

/// Recomputes `original` from its parameters. Identical results give exit
/// code 0, any difference gives 2.
pub fn replay(original: &ReportDocument) -> (ReportDocument, Outcome) {
    let fresh = execute(&original.command, &original.parameters);
    let identical = fresh.results == original.results && fresh.exit_code() == original.exit_code;
    let mut mismatched: Vec<String> = Vec::new();
    if let (Some(a), Some(b)) = (original.results.as_object(), fresh.results.as_object()) {
        let keys: std::collections::BTreeSet<&String> = a.keys().chain(b.keys()).collect();
        mismatched = keys
            .into_iter()
            .filter(|k| a.get(*k) != b.get(*k))
            .cloned()
            .collect();
    } else if !identical {
        mismatched.push("results".into());
    }
    let mut table = Table::new(["command", "identical", "mismatched_keys"]);
    table.push(vec![
        original.command.clone(),
        identical.to_string(),
        mismatched.join(";"),
    ]);
    let failure = (!identical)
        .then(|| CliError::Assertion(format!("replay of '{}' differs", original.command)));
    let results = json!({
        "command": original.command,
        "identical": identical,
        "mismatched_keys": mismatched,
        "results": fresh.results,
    });
    let outcome = Outcome {
        results: results.clone(),
        table,
        plot: None,
        failure,
    };
    let doc = ReportDocument {
        command: "replay".into(),
        parameters: original.parameters.clone(),
        results,
        exit_code: outcome.exit_code(),
        provenance: Provenance::now(),
    };
    (doc, outcome)
}

fn write_output(
    doc: &ReportDocument,
    outcome: &Outcome,
    out: &OutputFlags,
    stdout: &mut dyn Write,
) -> Result<(), CliError> {
    let text = match out.format {
        Format::Json => doc.to_json(),
        Format::Csv => outcome.table.to_csv(),
    };
    match &out.out {
        Some(path) => std::fs::write(path, text).map_err(|e| CliError::io(path, e))?,
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| CliError::io("<stdout>", e))?,
    }
    if let Some(path) = &out.plot {
        let plot = outcome
            .plot
            .as_ref()
            .ok_or_else(|| CliError::Usage(format!("'{}' does not produce a plot", doc.command)))?;
        emit_svg_scatter(plot, path)?;
    }
    Ok(())
}

/// Entry point shared by the binary and the tests. Returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    let (doc, outcome, out) = match &cli.command {
        Command::Replay(r) => match ReportDocument::read(&r.report) {
            Ok(orig) => {
                let (d, o) = replay(&orig);
                (d, o, r.output.clone())
            }
            Err(e) => {
                let _ = writeln!(stderr, "error: {e}");
                return e.exit_code();
            }
        },
        cmd => {
            let (name, flags) = cmd.split();
            let (doc, outcome) = match flags.resolve(name) {
                Ok(params) => run_command(name, params),
                Err(e) => {
                    let outcome = commands::error_outcome(e);
                    let doc = ReportDocument {
                        command: name.into(),
                        parameters: Params::default(),
                        results: outcome.results.clone(),
                        exit_code: outcome.exit_code(),
                        provenance: Provenance::now(),
                    };
                    (doc, outcome)
                }
            };
            (doc, outcome, flags.output.clone())
        }
    };
    if let Some(f) = &outcome.failure {
        let _ = writeln!(stderr, "error: {f}");
    }
    if let Err(e) = write_output(&doc, &outcome, &out, stdout) {
        let _ = writeln!(stderr, "error: {e}");
        return e.exit_code().max(outcome.exit_code());
    }
    outcome.exit_code()
}
