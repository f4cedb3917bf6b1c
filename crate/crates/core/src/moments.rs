//! Closed-form moments of the Cauchy distribution in terms of the complex
//! parameter `gamma = mu + i*sigma`.
//!
//! On the branch conventions of [`crate::branch`], for `|p| < 1`:
//!
//! * `E[X^p] = gamma^p`,
//! * `E[X^p; X > 0] = |gamma|^p * sin(p*(pi - arg gamma)) / sin(p*pi)`,
//! * `E[|X|^p] = |gamma|^p * cos(p*(arg gamma - pi/2)) / cos(p*pi/2)`,
//!
//! and for the logarithm `E[log|X|] = ln|gamma|`,
//! `Var(log|X|) = arg gamma * (pi - arg gamma)`, with `Var(log X)` twice that
//! because the indicator term contributes the same variance again. All of
//! these are cross-checked against [`crate::oracle`] in the test suites.

use num_complex::Complex64;

use crate::branch::cpow;
use crate::{Error, Result};

const PI: f64 = std::f64::consts::PI;
const FRAC_PI_2: f64 = std::f64::consts::FRAC_PI_2;

/// Location/scale pair `(mu, sigma)`, `sigma > 0`, viewed as
/// `gamma = mu + i*sigma` in the upper half-plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CauchyParams {
    mu: f64,
    sigma: f64,
}

impl CauchyParams {
    pub fn new(mu: f64, sigma: f64) -> Result<Self> {
        if !mu.is_finite() {
            return Err(Error::NonFinite);
        }
        if !sigma.is_finite() || sigma <= 0.0 {
            return Err(Error::InvalidScale(sigma));
        }
        Ok(Self { mu, sigma })
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    /// `gamma = mu + i*sigma`.
    pub fn gamma(&self) -> Complex64 {
        Complex64::new(self.mu, self.sigma)
    }

    /// `|gamma| = hypot(mu, sigma)`.
    pub fn abs_gamma(&self) -> f64 {
        self.mu.hypot(self.sigma)
    }

    /// `arg gamma` in `(0, pi)`; exactly `pi/2` when `mu = 0`.
    pub fn arg_gamma(&self) -> f64 {
        self.sigma.atan2(self.mu)
    }
}

fn check_p(p: f64) -> Result<()> {
    if !p.is_finite() {
        return Err(Error::NonFinite);
    }
    if p.abs() >= 1.0 {
        return Err(Error::PowerOutOfRange(p));
    }
    Ok(())
}

/// `E[X^p] = gamma^p` for `|p| < 1`, on the `k = 0` branch leaf.
pub fn expected_pow(params: &CauchyParams, p: f64) -> Result<Complex64> {
    check_p(p)?;
    cpow(params.gamma(), p, 0)
}

/// `E[X^p; X > 0] = |gamma|^p * sin(p*(pi - arg gamma)) / sin(p*pi)` for
/// `|p| < 1`; the `p -> 0` limit is the positive-mass identity
/// `P(X > 0) = (pi - arg gamma)/pi`.
pub fn expected_pow_positive(params: &CauchyParams, p: f64) -> Result<f64> {
    check_p(p)?;
    let theta = params.arg_gamma();
    if p == 0.0 {
        return Ok((PI - theta) / PI);
    }
    Ok(params.abs_gamma().powf(p) * (p * (PI - theta)).sin() / (p * PI).sin())
}

/// `E[|X|^p] = |gamma|^p * cos(p*(arg gamma - pi/2)) / cos(p*pi/2)` for
/// `|p| < 1`; equals 1 at `p = 0`.
pub fn expected_abs_pow(params: &CauchyParams, p: f64) -> Result<f64> {
    check_p(p)?;
    let theta = params.arg_gamma();
    Ok(params.abs_gamma().powf(p) * (p * (theta - FRAC_PI_2)).cos() / (p * FRAC_PI_2).cos())
}

/// First and second moments of `log X` on the fixed branch.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogMoments {
    /// `E[log|X|] = ln|gamma|`.
    pub e_log_abs: f64,
    /// `E[(log|X|)^2] = (ln|gamma|)^2 + arg gamma * (pi - arg gamma)`.
    pub e_log_abs_sq: f64,
    /// `Var(log|X|) = arg gamma * (pi - arg gamma)`.
    pub var_log_abs: f64,
    /// `Var(log X) = 2 * arg gamma * (pi - arg gamma)`; the sign indicator
    /// contributes the same variance as the modulus, with zero covariance.
    pub var_log: f64,
}

/// Closed-form moments of the branch logarithm of a Cauchy draw.
pub fn log_moments(params: &CauchyParams) -> LogMoments {
    let theta = params.arg_gamma();
    let e_log_abs = params.abs_gamma().ln();
    let var_log_abs = theta * (PI - theta);
    LogMoments {
        e_log_abs,
        e_log_abs_sq: e_log_abs * e_log_abs + var_log_abs,
        var_log_abs,
        var_log: 2.0 * var_log_abs,
    }
}

/// Variance of one component of the geometric mean of `n >= 3` draws:
///
/// `Var(Re GM_n) = Var(Im GM_n)
///   = (|gamma|^2 / 2) * ((cos((2*arg gamma - pi)/n) / cos(pi/n))^n - 1)`,
///
/// with zero covariance between the components. For `n <= 2` the underlying
/// `E[|X|^{2/n}]` diverges, hence [`Error::DegreeTooSmall`].
pub fn gm_component_variance(params: &CauchyParams, n: usize) -> Result<f64> {
    if n < 3 {
        return Err(Error::DegreeTooSmall(n));
    }
    let nf = n as f64;
    let theta = params.arg_gamma();
    let ratio = ((2.0 * theta - PI) / nf).cos() / (PI / nf).cos();
    let r = params.abs_gamma();
    Ok(r * r / 2.0 * (ratio.powf(nf) - 1.0))
}
