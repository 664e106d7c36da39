use thiserror::Error;

/// Errors surfaced by fallible algebra operations.
///
/// Structural misuse (mixing alphabets in `+`/`*`, indexing past a matrix
/// bound) panics instead; these variants are for conditions that depend on
/// the data.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("alphabets do not match: {0} vs {1}")]
    AlphabetMismatch(String, String),
    #[error("expected zero constant term, found {0}")]
    NonzeroConstantTerm(String),
    #[error("constant term must be invertible, found 0")]
    ZeroConstantTerm,
    #[error("input is not homogeneous")]
    NotHomogeneous,
    #[error("input is not a Lie element")]
    NotLie,
    #[error("element of degree {degree} exceeds truncation order {max_degree}")]
    BeyondTruncation { degree: usize, max_degree: usize },
    #[error("element is not in the span of the given basis")]
    NotInSpan,
    #[error("word does not end in the last letter (not a W-word)")]
    NotWWord,
    #[error("element is not push-invariant")]
    NotInert,
    #[error("degree out of range: {0}")]
    DegreeOutOfRange(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("inconsistent input: {0}")]
    InconsistentInput(String),
    #[error("cannot parse rational from {0:?}")]
    BadRational(String),
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
