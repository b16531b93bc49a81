use std::io;
use std::path::PathBuf;

use interval_hamilton::generators::GenError;
use interval_hamilton::hamiltonicity::HamiltonError;
use interval_hamilton::scattering::ScatteringValue;
use interval_hamilton::ParseError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },
    #[error("cannot write {}: {source}", path.display())]
    Write { path: PathBuf, source: io::Error },
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),
    #[error("cannot detect the input format; pass --format")]
    UnknownFormat,
    #[error("unknown vertex label {0:?}")]
    UnknownLabel(String),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Gen(#[from] GenError),
    #[error(transparent)]
    Hamilton(#[from] HamiltonError),
    #[error("unknown (scattering number {0})")]
    Unknown(ScatteringValue),
    #[error("{0}")]
    NoCertificate(String),
    #[error("certificate rejected")]
    Rejected(Vec<String>),
    #[error("internal check failed: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::NoCertificate(_) | CliError::Rejected(_) => 1,
            CliError::Io { .. }
            | CliError::Parse(_)
            | CliError::UnknownFormat
            | CliError::UnknownLabel(_)
            | CliError::Usage(_)
            | CliError::Gen(_) => 2,
            CliError::Hamilton(e) => match e {
                HamiltonError::Model(_)
                | HamiltonError::VertexOutOfRange { .. }
                | HamiltonError::InvalidPair { .. }
                | HamiltonError::EndpointRemoved { .. } => 2,
                HamiltonError::Infeasible { .. } => 1,
                _ => 4,
            },
            CliError::Unknown(_) => 3,
            CliError::Write { .. } | CliError::Internal(_) => 4,
        }
    }
}
