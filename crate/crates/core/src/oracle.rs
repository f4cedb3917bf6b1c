//! Numerical ground truth: expectations against the Cauchy density by
//! double-exponential quadrature, and brute-force Monte Carlo means.
//!
//! The closed forms in [`crate::moments`] are never used here; this module is
//! the independent referee they are tested against.
//!
//! Quadrature layout: the substitution `x = mu + sigma * tan(theta)` turns
//! `E[f(X)]` into `(1/pi) * integral of f(x(theta))` over `(-pi/2, pi/2)`; the
//! density cancels exactly, so heavy tails cost nothing. The integral is split
//! at `theta0 = atan(-mu/sigma)`, the preimage of `x = 0`, so the `|x|^p`
//! singularities (p < 0), the `ln|x|` blow-up, and the sign jump of indicator
//! integrands all sit at endpoints, where the tanh-sinh rule handles them
//! natively. Near the endpoints, `x` is rebuilt from the node offsets through
//! `x = |gamma| * sin(theta - theta0) / cos(theta)`; the naive
//! `mu + sigma*tan(theta)` would cancel catastrophically there and lose the
//! singular mass.

use num_complex::Complex64;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::moments::CauchyParams;
use crate::sum::CompensatedSum;
use crate::{Error, Result};

const PI: f64 = std::f64::consts::PI;
const FRAC_PI_2: f64 = std::f64::consts::FRAC_PI_2;

/// What to integrate against the Cauchy density.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Integrand {
    /// `x^p` on the fixed branch: negative `x` contributes `e^{i p pi} |x|^p`.
    Pow(f64),
    /// `x^p` restricted to `x > 0`.
    PowPositive(f64),
    /// `|x|^p`.
    AbsPow(f64),
    /// `ln|x|`.
    LogAbs,
    /// `(ln|x|)^2`.
    LogAbsSq,
    /// `(log x - log gamma)^2` with branch logs; expectation is 0 by the
    /// properness of `log`.
    LogComplexSq,
    /// `1_{x > 0}`.
    IndicatorPositive,
}

impl Integrand {
    fn validate(&self) -> Result<()> {
        match *self {
            Integrand::Pow(p) | Integrand::PowPositive(p) | Integrand::AbsPow(p) => {
                if !p.is_finite() {
                    return Err(Error::NonFinite);
                }
                if p.abs() >= 1.0 {
                    return Err(Error::PowerOutOfRange(p));
                }
            }
            _ => {}
        }
        Ok(())
    }

    /// Evaluates the integrand at a nonzero real `x`. `log_gamma` is the
    /// branch logarithm of gamma, needed only by `LogComplexSq`.
    fn eval(&self, x: f64, log_gamma: Complex64) -> Complex64 {
        match *self {
            Integrand::Pow(p) => {
                if x > 0.0 {
                    Complex64::new(x.powf(p), 0.0)
                } else {
                    let m = (-x).powf(p);
                    Complex64::new(m * (p * PI).cos(), m * (p * PI).sin())
                }
            }
            Integrand::PowPositive(p) => {
                if x > 0.0 {
                    Complex64::new(x.powf(p), 0.0)
                } else {
                    Complex64::new(0.0, 0.0)
                }
            }
            Integrand::AbsPow(p) => Complex64::new(x.abs().powf(p), 0.0),
            Integrand::LogAbs => Complex64::new(x.abs().ln(), 0.0),
            Integrand::LogAbsSq => {
                let l = x.abs().ln();
                Complex64::new(l * l, 0.0)
            }
            Integrand::LogComplexSq => {
                let l = Complex64::new(x.abs().ln(), if x < 0.0 { PI } else { 0.0 }) - log_gamma;
                l * l
            }
            Integrand::IndicatorPositive => Complex64::new(if x > 0.0 { 1.0 } else { 0.0 }, 0.0),
        }
    }
}

/// Converged quadrature value with its error estimate and cost.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    pub value: Complex64,
    /// Difference between the last two refinement levels.
    pub est_error: f64,
    /// Number of integrand evaluations spent.
    pub evaluations: usize,
}

const EVAL_BUDGET: usize = 1_000_000;
const MIN_TOL: f64 = 1e-12;
const U_MAX: f64 = 6.0;
const MAX_LEVEL: i32 = 12;

/// `E[f(X)]` for a built-in integrand; see [`cauchy_expect_with`].
pub fn cauchy_expect(
    spec: &Integrand,
    params: &CauchyParams,
    tol: f64,
) -> Result<QuadratureResult> {
    spec.validate()?;
    // local branch log of gamma; arg in (0, pi) because sigma > 0
    let log_gamma = Complex64::new(params.abs_gamma().ln(), params.sigma().atan2(params.mu()));
    cauchy_expect_with(|x| spec.eval(x, log_gamma), params, tol)
}

/// `E[f(X)]` for an arbitrary callback, by double-exponential quadrature with
/// absolute tolerance `tol >= 1e-12` and a budget of 10^6 evaluations.
///
/// `f` is never called at `x = 0`; it must be integrable against the Cauchy
/// density, with at worst an algebraic singularity milder than `1/x` at the
/// origin and growth slower than `|x|` in the tails.
pub fn cauchy_expect_with<F>(f: F, params: &CauchyParams, tol: f64) -> Result<QuadratureResult>
where
    F: Fn(f64) -> Complex64,
{
    if !tol.is_finite() || tol < MIN_TOL {
        return Err(Error::Param("tol must be finite and >= 1e-12"));
    }
    let theta0 = (-params.mu() / params.sigma()).atan();
    let r = params.abs_gamma();
    // (a, b, x > 0 on piece)
    let pieces = [(-FRAC_PI_2, theta0, false), (theta0, FRAC_PI_2, true)];

    let mut evaluations = 0usize;
    let mut prev = Complex64::new(0.0, 0.0);
    let mut est_error = f64::INFINITY;

    for level in 0..=MAX_LEVEL {
        let h = 0.5f64.powi(level);
        let max_k = (U_MAX / h) as i64;
        let mut sum_re = CompensatedSum::new();
        let mut sum_im = CompensatedSum::new();

        for &(a, b, positive) in &pieces {
            let width = b - a;
            if width <= 0.0 {
                // theta0 rounded onto the endpoint; the lost mass is O(1e-17)
                continue;
            }
            for k in -max_k..=max_k {
                let u = k as f64 * h;
                let v = FRAC_PI_2 * u.sinh();
                let ev = v.exp();
                let inv = 1.0 / ev;
                // offsets from the endpoints, exact where tan(theta) is not
                let da = width / (1.0 + inv * inv);
                let db = width / (1.0 + ev * ev);
                if da == 0.0 || db == 0.0 {
                    continue;
                }
                let sech = 2.0 / (ev + inv);
                let weight = 0.5 * width * FRAC_PI_2 * u.cosh() * sech * sech;
                if weight == 0.0 {
                    continue;
                }
                // x = |gamma| sin(theta - theta0)/cos(theta); on the right
                // piece theta - theta0 = da and cos(theta) = sin(db), on the
                // left piece theta - theta0 = -db and cos(theta) = sin(da)
                let x = if positive {
                    r * da.sin() / db.sin()
                } else {
                    -r * db.sin() / da.sin()
                };
                let value = f(x);
                evaluations += 1;
                sum_re.add(weight * value.re);
                sum_im.add(weight * value.im);
            }
        }

        let current = Complex64::new(sum_re.value() * h / PI, sum_im.value() * h / PI);
        if level >= 2 {
            est_error = (current - prev).norm();
            if est_error <= tol {
                return Ok(QuadratureResult {
                    value: current,
                    est_error,
                    evaluations,
                });
            }
        }
        prev = current;
        if evaluations > EVAL_BUDGET {
            break;
        }
    }

    Err(Error::NoConvergence {
        tol,
        est_error,
        evaluations,
    })
}

/// Monte Carlo moment with componentwise standard errors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McMoment {
    pub mean: Complex64,
    pub se_re: f64,
    pub se_im: f64,
}

impl McMoment {
    /// Combined standard error `hypot(se_re, se_im)`.
    pub fn std_error(&self) -> f64 {
        self.se_re.hypot(self.se_im)
    }
}

/// Brute-force mean of a built-in integrand over `n_draws` inverse-CDF Cauchy
/// draws from a dedicated ChaCha8 stream.
pub fn mc_moment(
    spec: &Integrand,
    params: &CauchyParams,
    n_draws: usize,
    seed: u64,
) -> Result<McMoment> {
    spec.validate()?;
    let log_gamma = Complex64::new(params.abs_gamma().ln(), params.sigma().atan2(params.mu()));
    mc_moment_with(|x| spec.eval(x, log_gamma), params, n_draws, seed)
}

/// Brute-force mean of an arbitrary callback; `f` is never called at `x = 0`.
pub fn mc_moment_with<F>(f: F, params: &CauchyParams, n_draws: usize, seed: u64) -> Result<McMoment>
where
    F: Fn(f64) -> Complex64,
{
    if n_draws < 2 {
        return Err(Error::SampleTooSmall { n: n_draws, min: 2 });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // Welford per component
    let mut mean = Complex64::new(0.0, 0.0);
    let mut m2 = Complex64::new(0.0, 0.0);
    for i in 1..=n_draws {
        let x = loop {
            let u = loop {
                let u = (rng.next_u64() >> 11) as f64 * (1.0 / 9_007_199_254_740_992.0);
                if u > 0.0 {
                    break u;
                }
            };
            let x = params.mu() + params.sigma() * (PI * (u - 0.5)).tan();
            if x != 0.0 && x.is_finite() {
                break x;
            }
        };
        let z = f(x);
        let count = i as f64;
        let d_re = z.re - mean.re;
        let d_im = z.im - mean.im;
        mean.re += d_re / count;
        mean.im += d_im / count;
        m2.re += d_re * (z.re - mean.re);
        m2.im += d_im * (z.im - mean.im);
    }
    let n = n_draws as f64;
    Ok(McMoment {
        mean,
        se_re: (m2.re / (n - 1.0) / n).sqrt(),
        se_im: (m2.im / (n - 1.0) / n).sqrt(),
    })
}
