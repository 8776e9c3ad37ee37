use std::path::PathBuf;

use stabgeom::GeomError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Malformed JSON, with the position reported by the parser.
    #[error("{path}:{line}:{column}: {message}")]
    Parse {
        path: String,
        line: usize,
        column: usize,
        message: String,
    },

    /// Well-formed JSON whose content does not describe a body.
    #[error("{path}: field `{field}`: {message}")]
    Field {
        path: String,
        field: String,
        message: String,
    },

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error(transparent)]
    Geom(#[from] GeomError),

    #[error("{0}")]
    Usage(String),

    /// A computed result contradicts a bound the command checks.
    #[error("assertion failed: {0}")]
    Assertion(String),
}

impl CliError {
    /// 1 for bad input, 2 for failed preconditions and assertions.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse { .. }
            | CliError::Field { .. }
            | CliError::Io { .. }
            | CliError::Usage(_) => 1,
            CliError::Assertion(_) => 2,
            CliError::Geom(e) => match e {
                GeomError::Degenerate(_)
                | GeomError::OriginOutside { .. }
                | GeomError::NotSymmetric { .. }
                | GeomError::InvalidArgument(_) => 1,
                GeomError::PreconditionViolated(_)
                | GeomError::SeparationViolated { .. }
                | GeomError::NoStableWindow(_) => 2,
            },
        }
    }

    /// Short machine-readable label used in reports.
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Parse { .. } => "parse",
            CliError::Field { .. } => "field",
            CliError::Io { .. } => "io",
            CliError::Usage(_) => "usage",
            CliError::Assertion(_) => "assertion",
            CliError::Geom(e) => match e {
                GeomError::Degenerate(_) => "degenerate",
                GeomError::OriginOutside { .. } => "origin-outside",
                GeomError::NotSymmetric { .. } => "not-symmetric",
                GeomError::SeparationViolated { .. } => "separation-violated",
                GeomError::PreconditionViolated(_) => "precondition-violated",
                GeomError::NoStableWindow(_) => "no-stable-window",
                GeomError::InvalidArgument(_) => "invalid-argument",
            },
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }
}
