use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("group order exceeds the configured cap of {cap} (reached {reached})")]
    OrderCap { reached: usize, cap: usize },
    #[error("permutation degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("subgroup belongs to a different group")]
    ParentMismatch,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("element set is not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("subgroup #{lower} is not contained in subgroup #{upper}")]
    NotContained { lower: usize, upper: usize },
    #[error("unknown group family `{name}` at position {pos}")]
    UnknownFamily { name: String, pos: usize },
    #[error("invalid group parameters: {0}")]
    InvalidFamily(String),
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("internal consistency failure: {0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
