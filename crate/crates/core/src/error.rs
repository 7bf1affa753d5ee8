use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("group order {order} exceeds the configured cap {cap}")]
    OrderCapExceeded { order: u128, cap: usize },

    #[error("rot(...) produced a subgroup of index {index}, expected 2")]
    NotIndexTwo { index: usize },

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("element is not a member of the group: {0}")]
    NotInGroup(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{k} is not coprime to the root-of-unity order {order}")]
    NotCoprime { k: i64, order: u32 },

    #[error("hypothesis violation: {0}")]
    HypothesisViolation(String),

    /// An identity that holds by theory failed; always an implementation bug.
    #[error("internal fault: {0}")]
    InternalFault(String),
}

impl Error {
    pub(crate) fn fault(msg: impl Into<String>) -> Self {
        Error::InternalFault(msg.into())
    }
}
