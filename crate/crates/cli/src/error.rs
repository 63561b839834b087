use std::path::PathBuf;

use thiserror::Error;

/// Everything a subcommand can fail with, grouped by exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("{path}: {source}")]
    File {
        path: PathBuf,
        source: nmsa_core::Error,
    },

    #[error(transparent)]
    Core(#[from] nmsa_core::Error),

    #[error("unsupported combination: {0}")]
    Unsupported(String),
}

impl CliError {
    /// 2 for bad input, 3 when a resource limit stops the run, 4 for a
    /// criterion/method pair that is not offered.
    pub fn exit_code(&self) -> u8 {
        use nmsa_core::Error as E;
        match self {
            CliError::Unsupported(_) => 4,
            CliError::Core(e) | CliError::File { source: e, .. } => match e {
                E::ResourceCapExceeded { .. }
                | E::BudgetExceeded(_)
                | E::TooManySequences { .. }
                | E::Overflow(_) => 3,
                _ => 2,
            },
            CliError::Input(_) | CliError::Io { .. } => 2,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
