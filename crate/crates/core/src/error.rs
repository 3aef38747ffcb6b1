use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid group order {0}")]
    InvalidOrder(usize),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("group closure exceeds the cap of {cap} elements")]
    GroupTooLarge { cap: usize },

    #[error("index {index} out of range for size {size}")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("duplicate arc ({0}, {1})")]
    DuplicateArc(usize, usize),

    #[error("input of size {size} exceeds the cap of {cap}")]
    TooLarge { size: usize, cap: usize },

    #[error("connection spec is for a group of order {spec}, but the group has order {group}")]
    OrderMismatch { spec: usize, group: usize },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    /// A parameter combination for which no representation of the requested
    /// kind exists.
    #[error("no representation exists: {0}")]
    Excluded(String),

    #[error("elements do not generate the group: {0}")]
    NotGenerating(String),

    /// A search that is guaranteed to succeed came back empty.
    #[error("search exhausted without success (this contradicts a proven existence result): {0}")]
    Contradiction(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
