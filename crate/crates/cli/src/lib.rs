//! Command-line surface over `hurwitz-core`: argument handling, caps, result cache
//! and deterministic output.

pub mod commands;
pub mod config;
pub mod record;

use thiserror::Error;

pub use commands::run;
pub use config::RunConfig;
pub use record::{Cache, ResultRecord};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cap exceeded: {0}")]
    CapExceeded(String),
    #[error("usage: {0}")]
    Usage(String),
    #[error("pipelines disagree: {0}")]
    PipelineDisagreement(String),
    #[error("check failed: {0}")]
    CheckFailed(String),
    #[error("engine error: {0}")]
    Engine(String),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// 1 for a mathematical failure, 2 for anything the caller can fix.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::PipelineDisagreement(_) | CliError::CheckFailed(_) | CliError::Engine(_) => 1,
            CliError::CapExceeded(_) | CliError::Usage(_) | CliError::Io(_) => 2,
        }
    }
}

/// What a command prints, and whether it should still exit nonzero.
#[derive(Debug)]
pub struct Output {
    pub stdout: String,
    pub failure: Option<CliError>,
}

impl Output {
    pub fn ok(stdout: String) -> Self {
        Output { stdout, failure: None }
    }
}
