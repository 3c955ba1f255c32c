//! Crate-wide error type.

use thiserror::Error;

/// Errors raised by construction and computation routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The (family, rank) pair is not an admissible simple Lie type.
    #[error("inadmissible Lie type {family}{rank}: {constraint}")]
    InadmissibleType {
        family: char,
        rank: usize,
        constraint: &'static str,
    },

    /// A weight, coefficient vector or index does not match the ambient rank.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// A simple-root index lies outside `1..=rank`.
    #[error("simple-root index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    /// Kähler coefficients must be strictly positive.
    #[error("Kähler coefficient c_{index} = {value} is not strictly positive")]
    NonPositiveKahler { index: usize, value: String },

    /// A weight is supported on the parabolic set where it must vanish.
    #[error("weight has a nonzero coordinate on the parabolic set (index {index})")]
    UnsupportedWeight { index: usize },

    /// The Weyl dimension formula needs a dominant integral weight.
    #[error("weight is not dominant integral (coordinate {index} = {value})")]
    NotDominantIntegral { index: usize, value: String },

    /// Whitney sums need at least one summand.
    #[error("a sum bundle needs at least one line-bundle summand")]
    EmptySum,

    /// Summands of a sum bundle, or a bundle and a Kähler class, live on
    /// different flag varieties.
    #[error("bundles live on different flag varieties")]
    FlagMismatch,

    /// Global endomorphism counting is implemented on the full flag only.
    #[error("h^0(End) is only computed on the full flag (empty parabolic set)")]
    NotFullFlag,

    /// A malformed rational literal.
    #[error("malformed rational literal {0:?}")]
    MalformedRational(String),

    /// A floating-point routine produced a non-finite value or a singular
    /// system.
    #[error("numerical failure: {0}")]
    Numerical(String),
}
