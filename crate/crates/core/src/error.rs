use crate::groebner::GbStats;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Operands live in different rings, or shapes do not line up.
    #[error("structural error: {0}")]
    Structural(String),

    /// A documented precondition of the operation was violated.
    #[error("contract violation: {0}")]
    Contract(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// The time budget ran out; carries the statistics gathered so far.
    #[error("timed out after {:.1}s ({} s-pairs processed)", stats.wall_time_secs, stats.spairs_processed)]
    Timeout { stats: GbStats },

    /// A degree cap stopped a computation whose result needs a complete basis.
    #[error("degree cap {cap} reached before completion")]
    Truncated { cap: u32, stats: GbStats },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn structural(msg: impl Into<String>) -> Self {
        Error::Structural(msg.into())
    }

    pub fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }

    pub fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }

    pub fn is_budget(&self) -> bool {
        matches!(self, Error::Timeout { .. } | Error::Truncated { .. })
    }
}
