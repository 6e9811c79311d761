use std::io;
use std::path::PathBuf;

use thiserror::Error;

/// Failure of a subcommand, carrying its process exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("normalization failure: {0}")]
    Normalization(String),
    #[error("cannot write {}: {source}", path.display())]
    Write { path: PathBuf, source: io::Error },
    #[error("{0}")]
    NonMonotone(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Internal(_) => 1,
            CliError::Malformed(_) => 2,
            CliError::Normalization(_) => 3,
            CliError::Write { .. } => 4,
            CliError::NonMonotone(_) => 5,
        }
    }

    pub(crate) fn stdout(source: io::Error) -> Self {
        CliError::Write {
            path: PathBuf::from("<stdout>"),
            source,
        }
    }
}

impl From<locc_core::Error> for CliError {
    fn from(e: locc_core::Error) -> Self {
        use locc_core::Error as E;
        match e {
            E::NotNormalized { .. } => CliError::Normalization(e.to_string()),
            E::NonMonotoneBoundary { .. } => CliError::NonMonotone(e.to_string()),
            E::RangeError(_)
            | E::DegenerateOverlap { .. }
            | E::AlphaOutOfRange { .. }
            | E::InvalidSimplex { .. }
            | E::ShapeError { .. }
            | E::NonFinite => CliError::Malformed(e.to_string()),
            _ => CliError::Internal(e.to_string()),
        }
    }
}
