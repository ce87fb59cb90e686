use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("usage error: {0}")]
    Usage(String),
    #[error(transparent)]
    Domain(#[from] tricurve_core::Error),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }

    /// `1` for domain and I/O failures, `2` for bad arguments.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(tricurve_core::Error::Parse | tricurve_core::Error::InvalidArgument(_)) => 2,
            _ => 1,
        }
    }

    pub fn code(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "Usage",
            CliError::Domain(e) => e.code(),
            CliError::Io(_) => "Io",
            CliError::Json(_) => "Json",
            CliError::Csv(_) => "Csv",
        }
    }

    pub fn report(&self) -> ErrorReport {
        ErrorReport { status: "error".into(), code: self.code().into(), message: self.to_string() }
    }
}

/// Error document written to stderr.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorReport {
    pub status: String,
    pub code: String,
    pub message: String,
}
