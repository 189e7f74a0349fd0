use thiserror::Error;

/// Errors raised by geometric constructions, transforms, bounds and the certifier.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("stretch amount must be nonnegative, got {0}")]
    NegativeAmount(String),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("point {0} lies outside the function domain")]
    OutOfDomain(String),

    #[error("function kind mismatch: expected {expected}")]
    KindMismatch { expected: &'static str },

    #[error("slope-gap hypothesis violated: f slope {f_slope} < g slope {g_slope} + eps {eps}")]
    HypothesisViolated {
        f_slope: String,
        g_slope: String,
        eps: String,
    },

    #[error("volumes must be positive")]
    NonPositiveVolume,

    #[error("bound inputs must be positive")]
    NonPositiveInput,

    #[error("domain mismatch: {0}")]
    DomainMismatch(String),

    #[error("body is not aligned on its maximal chord: {0}")]
    NotAligned(String),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
