use num_bigint::BigInt;
use thiserror::Error;

/// Errors reported by the domain operations.
///
/// Lexical problems (bad tokens in an overrides file) and semantic problems
/// (a well-formed input that violates a precondition) are kept in distinct
/// variants so callers can map them to different exit codes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("multidegree must contain at least one entry")]
    EmptyMultiDegree,

    #[error("multidegree entries must be at least 1")]
    ZeroDegreeEntry,

    #[error("partition parts must be weakly decreasing, got {0:?}")]
    NotAPartition(Vec<u32>),

    #[error("need 0 <= r < n, got r = {r} and n = {n}")]
    InvalidProblem { n: u32, r: u32 },

    #[error("expected dimension is negative (delta = {delta}); the degree is not defined")]
    NegativeExpectedDimension { delta: BigInt },

    #[error("expected dimension delta = {delta} is too large to expand")]
    ExpectedDimensionTooLarge { delta: BigInt },

    #[error("r0 = {r0} out of range, need -1 <= r0 < r = {r}")]
    ReferencePlaneOutOfRange { r0: i64, r: u32 },

    #[error("splitting type requires n >= {required}, got n = {n}")]
    SplittingHypothesisViolated { n: u32, required: BigInt },

    #[error("partition {parts:?} does not fit in the {rows} x {cols} rectangle")]
    PartitionOutsideRectangle {
        parts: Vec<u32>,
        rows: usize,
        cols: u32,
    },

    #[error(
        "unirationality bound requires every degree >= 2; a degree-1 equation only cuts \
         the ambient projective space down by one, so drop the entry and lower n instead"
    )]
    DegreeOneEntry,

    #[error("overrides file, line {line}: {message}")]
    OverridesSyntax { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
