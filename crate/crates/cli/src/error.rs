use std::process::ExitCode;

use bernstein_core::Error as CoreError;
use thiserror::Error;

/// Failure of a command, carrying its exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Io(String),
    #[error("schema error: {0}")]
    Schema(String),
    #[error("stochasticity error: {0}")]
    Stochastic(String),
    #[error("guard exceeded: {0}")]
    Guard(String),
    /// The command ran but some required check did not pass.
    #[error("{0}")]
    ChecksFailed(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            CliError::Io(_) | CliError::ChecksFailed(_) | CliError::Internal(_) => 1,
            CliError::Schema(_) => 2,
            CliError::Stochastic(_) => 3,
            CliError::Guard(_) => 4,
        })
    }

    pub fn io(path: &std::path::Path, e: std::io::Error) -> Self {
        CliError::Io(format!("{}: {e}", path.display()))
    }
}

/// Converts a library error, shifting the indices it names to 1-based.
impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::NotStochastic { i, k, sum } => CliError::Stochastic(format!(
                "offspring distribution of pair ({}, {}) sums to {sum}, expected 1",
                i + 1,
                k + 1
            )),
            CoreError::NegativeEntry { i, k, j, value } => CliError::Stochastic(format!(
                "coefficient ({}, {}) -> {} is negative: {value}",
                i + 1,
                k + 1,
                j + 1
            )),
            CoreError::DuplicateEntry { i, k, j } => CliError::Schema(format!(
                "duplicate coefficient ({}, {}) -> {}",
                i + 1,
                k + 1,
                j + 1
            )),
            CoreError::IndexOutOfRange { index, n } => {
                CliError::Schema(format!("index {} out of range 1..={n}", index + 1))
            }
            CoreError::EmptyDimension | CoreError::DimensionMismatch { .. } => {
                CliError::Schema(e.to_string())
            }
            CoreError::InvalidParameters(msg) => CliError::Schema(msg),
            CoreError::GuardExceeded { .. } => CliError::Guard(e.to_string()),
            other => CliError::Internal(other.to_string()),
        }
    }
}
