use thiserror::Error;

/// Errors produced by parameter validation and the numerical routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A datum (or power base) is exactly zero; its logarithm is undefined.
    #[error("datum is exactly zero; the branch logarithm is undefined at 0")]
    ZeroDatum,
    /// An input is NaN or infinite.
    #[error("input is not finite")]
    NonFinite,
    /// Power moments exist only for |p| < 1; outside, the expectation diverges.
    #[error("exponent p = {0} is outside the open interval (-1, 1)")]
    PowerOutOfRange(f64),
    /// The geometric-mean component variance is finite only for n >= 3.
    #[error("component variance requires n >= 3 factors, got n = {0}")]
    DegreeTooSmall(usize),
    /// An operation needs more observations than the sample provides.
    #[error("sample of size {n} is too small, need at least {min}")]
    SampleTooSmall { n: usize, min: usize },
    /// Quantile level outside the open interval (0, 1).
    #[error("quantile level {0} is outside (0, 1)")]
    QuantileDomain(f64),
    /// Confidence level alpha outside its admissible range for the region.
    #[error("alpha = {0} is outside the admissible range")]
    AlphaDomain(f64),
    /// Scale parameter must be positive and finite.
    #[error("scale sigma = {0} must be positive and finite")]
    InvalidScale(f64),
    /// Any other invalid scalar parameter.
    #[error("invalid parameter: {0}")]
    Param(&'static str),
    /// Quadrature failed to reach the requested tolerance within its budget.
    #[error(
        "quadrature stalled at estimated error {est_error:.2e} \
         (tolerance {tol:.2e}, {evaluations} evaluations)"
    )]
    NoConvergence {
        tol: f64,
        est_error: f64,
        evaluations: usize,
    },
}
