use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors produced by construction, parsing and the comparison pipeline.
#[derive(Debug, Error)]
pub enum Error {
    /// Fewer than the three samples needed to describe a function on the circle.
    #[error("need at least 3 samples, got {len}")]
    EmptyInput { len: usize },

    /// A sample value was NaN or infinite.
    #[error("non-finite value at index {index}")]
    NonFiniteValue { index: usize },

    /// Two objects that must share a sample count do not.
    #[error("sample counts differ: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    /// Persistent Betti numbers are only defined for level pairs u <= v.
    #[error("invalid level pair: u = {lower} exceeds v = {upper}")]
    InvalidLevelPair { lower: f64, upper: f64 },

    /// Diagrams with different essential-class multiplicities cannot be matched.
    #[error("essential class count mismatch in degree {degree}: {left} vs {right}")]
    EssentialMismatch {
        degree: u8,
        left: usize,
        right: usize,
    },

    /// The exhaustive matcher refuses instances above its point cap.
    #[error("too many finite points for exhaustive matching: {points} (cap {cap})")]
    TooLarge { points: usize, cap: usize },

    /// A numeric argument outside its documented domain.
    #[error("invalid parameter: {what}")]
    InvalidParameter { what: String },

    /// An operator description that violates a constructor constraint.
    #[error("operator {index} violates a constraint: {message}")]
    ConstraintViolation { index: usize, message: String },

    /// Malformed input file content.
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}
