use std::path::PathBuf;

use hodokit::HodoError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Hodo(#[from] HodoError),

    #[error("{0}")]
    Config(String),

    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },

    #[error("cannot write {path}: {source}")]
    Write { path: PathBuf, source: std::io::Error },

    #[error("malformed config {path}: {source}")]
    ConfigJson { path: PathBuf, source: serde_json::Error },

    #[error("verification failed: {0}")]
    Verification(String),
}

impl CliError {
    /// 1 for bad input, 2 for I/O or failed checks, 3 when no orbit exists.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Hodo(HodoError::NoTrajectory) => 3,
            CliError::Hodo(
                HodoError::QuadratureDivergence(_)
                | HodoError::NonConvergence(_)
                | HodoError::RangeOverflow { .. },
            ) => 2,
            CliError::Hodo(_) | CliError::Config(_) | CliError::ConfigJson { .. } => 1,
            CliError::Read { .. } | CliError::Write { .. } | CliError::Verification(_) => 2,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
