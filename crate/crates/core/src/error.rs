use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero has no inverse")]
    ZeroInverse,
    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("enumeration of {points} points exceeds cap {cap}")]
    TooLarge { points: u64, cap: u64 },
    #[error("operands live over different alphabets or rings")]
    AlphabetMismatch,
    #[error("word {0} has no homogeneous grading")]
    InhomogeneousWord(String),
    #[error("leading coefficient of {0} is not an invertible constant")]
    NotMonic(String),
    #[error("rule {lhs} -> ... has right-hand word {word} not smaller than its left side")]
    OrderViolation { lhs: String, word: String },
    #[error("left side {inner} is a subword of left side {outer}")]
    NotInterReduced { inner: String, outer: String },
    #[error("system is not confluent ({0} unresolved ambiguities)")]
    NotConfluent(usize),
    #[error("irreducible words form an infinite set")]
    InfiniteBasis,
    #[error("operation needs numeric scalars")]
    ParametricScalars,
    #[error("braiding is neither diagonal nor Jordan")]
    Unclassifiable,
    #[error("Jordan Nichols algebra at p = 2 has dimension 16, not p^2")]
    JordanP2Dim,
    #[error("incompatible data: {0}")]
    IncompatibleData(String),
    #[error("complex dimension {dim} exceeds cap {cap}")]
    DimensionBlowup { dim: u64, cap: u64 },
    #[error("inadmissible family parameters: {0}")]
    Inadmissible(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown symbol or parameter {0}")]
    UnknownName(String),
}

pub type Result<T> = std::result::Result<T, Error>;
