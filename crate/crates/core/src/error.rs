use thiserror::Error;

/// Errors surfaced by constructors and partial operations.
///
/// Internal consistency violations (an alternating Stirling sum not divisible
/// by `k!`, for instance) are bugs, not user errors, and panic instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rational denominator is zero")]
    ZeroDenominator,

    #[error("division by zero")]
    DivisionByZero,

    #[error("r-Stirling numbers are defined for n >= r (got n = {n}, r = {r})")]
    IndexBelowBase { n: usize, r: usize },

    #[error("triangle bound n_max = {n_max} is below r = {r}")]
    TriangleBound { n_max: usize, r: usize },

    #[error("cannot invert a series whose constant term is zero")]
    NonInvertibleSeries,

    #[error("series exp requires a zero constant term")]
    ExpConstantTerm,

    #[error("series log requires constant term exactly one")]
    LogConstantTerm,

    #[error("cannot divide by t: constant term is nonzero or the series has order zero")]
    DivideByT,

    #[error("malformed rational literal `{0}`")]
    ParseRational(String),

    #[error("malformed integer literal `{0}`")]
    ParseInt(String),
}

pub type Result<T> = std::result::Result<T, Error>;
