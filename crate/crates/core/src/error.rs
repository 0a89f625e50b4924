use thiserror::Error;

/// Errors raised by the combinatorial and experimental layers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid symbol {symbol}: {reason}")]
    InvalidSymbol { symbol: String, reason: String },

    #[error("symbol {symbol} outside alphabet (k = {k}, l = {l})")]
    Alphabet { symbol: String, k: u32, l: u32 },

    #[error("cell ({row},{col}) is not a corner of the shape")]
    InvalidCorner { row: usize, col: usize },

    #[error("tableau is not {expected}: {reason}")]
    Kind { expected: &'static str, reason: String },

    #[error("invalid diagram: {0}")]
    Diagram(String),

    #[error("invalid deletion schedule: {0}")]
    Schedule(String),

    #[error("diagram {inner} is not contained in {outer}")]
    Containment { inner: String, outer: String },

    #[error("resource guard exceeded: {0}")]
    Guard(String),

    #[error("not a path in the graph: {0}")]
    Path(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid configuration: {field}: {reason}")]
    Config { field: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn config(field: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Config {
            field: field.into(),
            reason: reason.into(),
        }
    }
}
