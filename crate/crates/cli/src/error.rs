use thiserror::Error;

/// Everything that ends a command before a verdict: exit code 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {message}")]
    Manifest { path: String, message: String },
    #[error("unknown manifold {0:?}: not a file and not in the catalog")]
    UnknownManifold(String),
    #[error(transparent)]
    Core(#[from] symprod_core::Error),
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;

/// Process exit codes.
pub mod exit {
    pub const PASS: i32 = 0;
    pub const MISMATCH: i32 = 1;
    pub const INPUT: i32 = 2;
}
