use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("gauge must be strictly positive, got {0}")]
    NonPositiveGauge(String),

    #[error("empty interval: lower bound {lo} exceeds upper bound {hi}")]
    EmptyInterval { lo: String, hi: String },

    #[error("gauge schedule must be non-empty, positive and strictly decreasing")]
    InvalidSchedule,

    #[error("series radius must lie in (0, 1/2], got {0}")]
    InvalidRadius(String),

    /// A real could not be shown apart from zero; it may be zero.
    #[error("cannot separate from zero at precision 2^-{halvings}")]
    CannotSeparate { halvings: u32 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("{0}")]
    Parse(#[from] crate::expr::ParseError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
