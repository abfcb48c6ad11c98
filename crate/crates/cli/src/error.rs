use std::io;
use std::path::Path;

use pathhom_core::sampling::SamplingError;
use pathhom_core::{GraphError, HomologyError, PersistenceError};
use thiserror::Error;

/// Failure of a command, carrying its process exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Validation(String),
    #[error("dimension guard: {0}")]
    Guard(String),
    #[error("engines disagree: {0}")]
    Mismatch(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(_) => 1,
            CliError::Parse(_) => 2,
            CliError::Validation(_) => 3,
            CliError::Guard(_) => 4,
            CliError::Mismatch(_) => 5,
        }
    }

    /// Prefixes the message with the file it concerns.
    pub fn in_file(self, path: &Path) -> Self {
        let at = |m: String| format!("{}: {m}", path.display());
        match self {
            CliError::Parse(m) => CliError::Parse(at(m)),
            CliError::Validation(m) => CliError::Validation(at(m)),
            CliError::Guard(m) => CliError::Guard(at(m)),
            CliError::Mismatch(m) => CliError::Mismatch(at(m)),
            CliError::Io(m) => CliError::Io(at(m)),
        }
    }

    pub(crate) fn io(path: &Path, err: io::Error) -> Self {
        if err.kind() == io::ErrorKind::InvalidData {
            CliError::Parse(format!("{}: not valid UTF-8", path.display()))
        } else {
            CliError::Io(format!("{}: {err}", path.display()))
        }
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        CliError::Validation(e.to_string())
    }
}

impl From<HomologyError> for CliError {
    fn from(e: HomologyError) -> Self {
        match e {
            HomologyError::DimensionGuard { .. } => CliError::Guard(e.to_string()),
            other => CliError::Validation(other.to_string()),
        }
    }
}

impl From<PersistenceError> for CliError {
    fn from(e: PersistenceError) -> Self {
        CliError::Validation(e.to_string())
    }
}

impl From<SamplingError> for CliError {
    fn from(e: SamplingError) -> Self {
        CliError::Validation(e.to_string())
    }
}
