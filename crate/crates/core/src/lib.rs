//! Estimation of the complex Cauchy parameter gamma = mu + i*sigma from real
//! samples.
//!
//! A Cauchy distribution with location `mu` and scale `sigma > 0` is treated
//! as the single complex parameter `gamma = mu + i*sigma` in the upper
//! half-plane. The complex geometric mean of a sample, computed with a fixed
//! branch of the logarithm, is an unbiased estimator of gamma. Module map:
//!
//! * [`branch`]: the branch conventions shared by everything else,
//! * [`moments`]: closed-form moments of powers and logarithms of Cauchy draws,
//! * [`estimate`]: the geometric-mean estimator, its log-variance, and the
//!   shift-based variants,
//! * [`regions`]: asymptotic confidence discs, squares, and intervals,
//! * [`oracle`]: quadrature and brute-force Monte Carlo ground truth used to
//!   cross-check the closed forms,
//! * [`mc`]: deterministic seeded simulation drivers (coverage studies, the
//!   median-shift pipeline, the outlier comparison, the epsilon-shift study).
//!
//! Branch conventions, used consistently everywhere: real data enter through
//! `log x = ln|x| + i*pi*[x < 0]`, and complex powers measure arguments in
//! `[0, 2*pi)`. See [`branch`] for details.

pub mod branch;
mod error;
pub mod estimate;
pub mod mc;
pub mod moments;
pub mod oracle;
pub mod regions;
pub(crate) mod sum;

pub use error::Error;
pub use num_complex::Complex64;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
