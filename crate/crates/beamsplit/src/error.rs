//! Error type shared across the crate.

use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A numeric argument violated a documented precondition.
    #[error("invalid parameter `{name}`: {message}")]
    InvalidParameter { name: &'static str, message: String },

    /// The momentum grid cannot hold the requested initial state.
    #[error(
        "grid too narrow for delta_p = {delta_p}: boundary amplitude exp(-p_max^2/delta_p^2) = \
         {boundary:.3e} at p_max = {p_max} exceeds 1e-12; widen the shell halfwidth"
    )]
    GridTooNarrow {
        delta_p: f64,
        p_max: f64,
        boundary: f64,
    },

    /// Config file rejected; always names the offending line.
    #[error("config line {line}: {message}")]
    Config { line: usize, message: String },

    /// Time integration failed to meet its tolerance.
    #[error("integration failed: {message}")]
    Integration { message: String },

    /// The truncation search exceeded its hard cap.
    #[error(
        "truncation search exceeded the cap N = {cap}; reduce tau_end or the coupling scale"
    )]
    TruncationCap { cap: usize },

    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn invalid(name: &'static str, message: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            message: message.into(),
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
