use thiserror::Error;

/// Errors raised by the group, field and graph kernels.
#[derive(Debug, Error)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("not a permutation: {0}")]
    NotBijection(String),

    #[error("not a subgroup: {0}")]
    NotSubgroup(String),

    #[error("{what} exceeds bound ({value} > {bound})")]
    BoundExceeded {
        what: &'static str,
        value: u64,
        bound: u64,
    },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("inversion of zero")]
    ZeroInverse,

    #[error("certification failed: {0}")]
    Certification(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
