use std::path::PathBuf;

/// Errors surfaced by the library.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Two artifacts built with different embedders (or dimensions) were mixed.
    #[error("incompatible embedder: expected `{expected}`, found `{found}`")]
    Incompatible { expected: String, found: String },

    /// A persisted index failed validation.
    #[error("index integrity error at entry `{entry}`: {reason}")]
    Integrity { entry: String, reason: String },

    #[error("prompt budget of {budget} tokens cannot hold {required} required tokens")]
    Budget { budget: usize, required: usize },

    /// A remote call failed after exhausting its retries. Retryable by the caller.
    #[error("transport failure after {attempts} attempt(s): {message}")]
    Transport { attempts: u32, message: String },

    #[error("malformed response: {0}")]
    Protocol(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// Whether retrying the same call may succeed.
    pub fn is_retryable(&self) -> bool {
        matches!(self, Error::Transport { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
