use thiserror::Error;

/// Errors raised by constructors and bijections when an input violates a
/// class-membership or shape invariant.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("partition parts must be positive, found {0}")]
    NonPositivePart(i64),
    #[error("partition parts must be non-increasing: {prev} is followed by {next}")]
    Increasing { prev: usize, next: usize },
    #[error("distinct partition parts must be strictly decreasing: {prev} is followed by {next}")]
    NotStrictlyDecreasing { prev: usize, next: usize },
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("modulus must be at least {min}, got {got}")]
    BadModulus { min: usize, got: usize },
    #[error("{partition} is not a {t}-core (it has a hook of length {t})")]
    NotCore { partition: String, t: usize },
    #[error("{0} is not self-conjugate")]
    NotSelfConjugate(String),
    #[error("{0} is not doubled distinct")]
    NotDoubledDistinct(String),
    #[error("vector entries must sum to zero, got {0}")]
    NonZeroSum(i64),
    #[error("vector has length {got}, expected {expected}")]
    BadLength { expected: usize, got: usize },
    #[error("principal hook lengths {0:?} are not distinct")]
    RepeatedHooks(Vec<usize>),
    #[error("principal hook lengths must share one parity, got {0:?}")]
    MixedParity(Vec<usize>),
    #[error("unsupported lattice parameters: {0}")]
    Lattice(String),
    #[error("exponent {exponent} is not offset {offset} plus a nonnegative integer")]
    NonIntegralExponent { exponent: String, offset: String },
    #[error("series offsets {left} and {right} differ by a non-integer")]
    OffsetMismatch { left: String, right: String },
    #[error("series with zero constant term has no inverse")]
    NotInvertible,
    #[error("zero denominator in factor {0}")]
    ZeroDenominator(String),
    #[error("{0} is not a 2t+2-compact set: {1}")]
    NotCompact(String, String),
}

pub type Result<T> = std::result::Result<T, Error>;
