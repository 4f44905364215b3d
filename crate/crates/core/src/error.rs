use thiserror::Error;

/// Errors raised by the counting library.
///
/// Positions reported in [`Error::DuplicateValue`] and [`Error::NonFinite`]
/// are 1-based, matching the input file line order.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("duplicate value at positions {first} and {second}")]
    DuplicateValue { first: usize, second: usize },

    #[error("non-finite value at position {0}")]
    NonFinite(usize),

    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    #[error("invalid pattern: {0}")]
    InvalidPattern(String),

    #[error("pattern of length {len} is not supported here (maximum {max})")]
    PatternTooLong { len: usize, max: usize },

    #[error("epsilon must lie in (0, 1), got {0}")]
    InvalidEpsilon(f64),

    #[error("invalid range: {0}")]
    InvalidRange(String),

    #[error("rank {rank} out of range (only {available} points)")]
    RankOutOfRange { rank: u64, available: u64 },

    #[error("node rectangles are not disjoint")]
    NotDisjoint,

    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error("invalid recipe: {0}")]
    InvalidRecipe(String),

    #[error("no recipe for pattern {pattern} under configuration {config}")]
    MissingRecipe { pattern: String, config: String },

    #[error("no recipe or factorization covers pattern {pattern} under configuration {config}")]
    CoverageGap { pattern: String, config: String },

    #[error("configuration is not a factorization special case")]
    NotSpecialCase,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
