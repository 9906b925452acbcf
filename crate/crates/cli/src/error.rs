use std::io;

use eqidx_core::poly::PolyError;
use eqidx_core::IndexError;
use serde_json::json;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: io::Error,
    },
    #[error("invalid problem file: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Usage(String),
    #[error("{field}[{index}]: {source}")]
    Parse {
        field: &'static str,
        index: usize,
        #[source]
        source: PolyError,
    },
    #[error(transparent)]
    Math(#[from] IndexError),
}

impl CliError {
    /// 2 for unusable input, 3 for mathematical precondition violations.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Math(IndexError::Poly(_)) => 2,
            CliError::Math(_) => 3,
            _ => 2,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Io { .. } => "Io",
            CliError::Json(_) => "InvalidJson",
            CliError::Usage(_) => "Usage",
            CliError::Parse { .. } => "ParseError",
            CliError::Math(e) => e.kind(),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({ "error": { "kind": self.kind(), "message": self.to_string() } })
    }
}
