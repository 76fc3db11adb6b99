use std::path::PathBuf;

use thiserror::Error;

/// Process exit codes.
pub mod exit {
    pub const OK: u8 = 0;
    pub const INPUT: u8 = 1;
    pub const UNSUPPORTED: u8 = 2;
    pub const INVARIANT: u8 = 3;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Input(khds_core::Error),
    #[error("not a cactus")]
    NotCactus,
    #[error("usage: {0}")]
    Usage(String),
    #[error("vertex {witness} is {dist} hops from the set (k = {k})")]
    Uncovered {
        witness: usize,
        dist: usize,
        k: usize,
    },
    #[error("invariant violated: {0}")]
    Invariant(String),
}

impl From<khds_core::Error> for CliError {
    fn from(e: khds_core::Error) -> Self {
        match e {
            khds_core::Error::NotCactus => CliError::NotCactus,
            khds_core::Error::EmptySet => CliError::Usage("the set file lists no vertices".into()),
            e => CliError::Input(e),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } | CliError::Input(_) | CliError::Usage(_) => exit::INPUT,
            CliError::Uncovered { .. } => exit::INPUT,
            CliError::NotCactus => exit::UNSUPPORTED,
            CliError::Invariant(_) => exit::INVARIANT,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
