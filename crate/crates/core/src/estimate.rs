//! Point estimation of gamma from real samples.
//!
//! The geometric mean `P_N = exp((1/N) sum log X_j)`, with logarithms on the
//! fixed branch of [`crate::branch`], is an unbiased estimator of gamma. Its
//! imaginary part is `exp(mean ln|X_j|) * sin(pi * f)` where `f` is the
//! fraction of negative data, so `Im P_N >= 0` always, and `P_N` is real
//! exactly when the data are all of one sign.
//!
//! `V_N` estimates `Var(log X)`. The default [`VFormula::Corrected`] form is
//! the mean squared deviation of the logs about their mean,
//! `(1/(N-1)) sum |log X_j - mean|^2`; [`VFormula::Paper`] keeps the
//! `(1/(N-1)) sum |log X_j|^2 - |mean|^2` variant for comparison (it is not an
//! unbiased variance estimate, but the difference vanishes at the rate 1/N).
//!
//! All sums run in index order with Neumaier compensation, so results are
//! reproducible bit for bit.

use num_complex::Complex64;

use crate::branch::{arg_in_0_2pi, branch_log};
use crate::sum::CompensatedSum;
use crate::{Error, Result};

/// A validated sample: at least one observation, all finite and nonzero.
#[derive(Debug, Clone, PartialEq)]
pub struct Sample(Vec<f64>);

impl Sample {
    /// Validates every datum: rejects NaN, infinities, and exact zeros.
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::SampleTooSmall { n: 0, min: 1 });
        }
        for &x in &values {
            if !x.is_finite() {
                return Err(Error::NonFinite);
            }
            if x == 0.0 {
                return Err(Error::ZeroDatum);
            }
        }
        Ok(Self(values))
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false: construction rejects empty samples.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl TryFrom<Vec<f64>> for Sample {
    type Error = Error;

    fn try_from(values: Vec<f64>) -> Result<Self> {
        Sample::new(values)
    }
}

/// Which `V_N` variant to compute.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum VFormula {
    /// `(1/(N-1)) sum |log X_j - mean log|^2`.
    #[default]
    Corrected,
    /// `(1/(N-1)) sum |log X_j|^2 - |mean log|^2`, as printed in the source
    /// derivation of the confidence disc.
    Paper,
}

/// Point estimate with the log-variance that scales its confidence regions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EstimateResult {
    /// Geometric mean `P_N`.
    pub p_n: Complex64,
    /// Log-variance `V_N`.
    pub v_n: f64,
    /// Sample size.
    pub n: usize,
    /// Which variant `v_n` was computed with.
    pub v_formula: VFormula,
}

/// Compensated mean of the branch logs, in index order.
fn mean_log(values: &[f64]) -> Complex64 {
    let mut re = CompensatedSum::new();
    let mut im = CompensatedSum::new();
    for &x in values {
        let l = branch_log(x).expect("sample data are validated nonzero and finite");
        re.add(l.re);
        im.add(l.im);
    }
    let n = values.len() as f64;
    Complex64::new(re.value() / n, im.value() / n)
}

/// Geometric mean `P_N = exp((1/N) sum log X_j)` on the fixed branch.
///
/// Defined for any sample size >= 1; the imaginary part is always >= 0 and is
/// exactly zero for all-positive data.
pub fn geometric_mean(sample: &Sample) -> Complex64 {
    mean_log(sample.values()).exp()
}

/// Log-variance `V_N` of the sample; needs at least two observations.
pub fn log_variance(sample: &Sample, formula: VFormula) -> Result<f64> {
    let n = sample.len();
    if n < 2 {
        return Err(Error::SampleTooSmall { n, min: 2 });
    }
    let mean = mean_log(sample.values());
    let mut acc = CompensatedSum::new();
    match formula {
        VFormula::Corrected => {
            for &x in sample.values() {
                let l = branch_log(x).expect("validated");
                acc.add((l - mean).norm_sqr());
            }
            Ok(acc.value() / (n as f64 - 1.0))
        }
        VFormula::Paper => {
            for &x in sample.values() {
                let l = branch_log(x).expect("validated");
                acc.add(l.norm_sqr());
            }
            Ok(acc.value() / (n as f64 - 1.0) - mean.norm_sqr())
        }
    }
}

/// Geometric-mean point estimate together with its log-variance.
pub fn estimate(sample: &Sample, formula: VFormula) -> Result<EstimateResult> {
    let v_n = log_variance(sample, formula)?;
    Ok(EstimateResult {
        p_n: geometric_mean(sample),
        v_n,
        n: sample.len(),
        v_formula: formula,
    })
}

/// Shift-based unbiased estimate
/// `theta - i*eps + prod (X_j - theta + i*eps)^{1/N}`,
/// with arguments of the shifted data measured in `[0, 2*pi)`.
///
/// Unbiased for every shift `theta` and every `eps >= 0`. When `eps = 0` and
/// `theta` equals a datum exactly, the product vanishes and the estimate
/// collapses to `theta + 0i`; callers can detect the collapse through the zero
/// imaginary part.
pub fn shifted_estimate(sample: &Sample, theta: f64, epsilon: f64) -> Result<Complex64> {
    if !theta.is_finite() || !epsilon.is_finite() {
        return Err(Error::NonFinite);
    }
    if epsilon < 0.0 {
        return Err(Error::Param("epsilon must be >= 0"));
    }
    let mut re = CompensatedSum::new();
    let mut im = CompensatedSum::new();
    for &x in sample.values() {
        let z = Complex64::new(x - theta, epsilon);
        if z.re == 0.0 && z.im == 0.0 {
            return Ok(Complex64::new(theta, 0.0));
        }
        re.add(z.norm().ln());
        im.add(arg_in_0_2pi(z));
    }
    let n = sample.len() as f64;
    let gm = Complex64::new(re.value() / n, im.value() / n).exp();
    Ok(Complex64::new(theta, -epsilon) + gm)
}

fn sorted(sample: &Sample) -> Vec<f64> {
    let mut v = sample.values().to_vec();
    v.sort_unstable_by(f64::total_cmp);
    v
}

/// Classical median: middle order statistic, or the average of the two middle
/// ones when N is even.
pub fn median(sample: &Sample) -> f64 {
    let v = sorted(sample);
    let n = v.len();
    if n % 2 == 1 {
        v[n / 2]
    } else {
        (v[n / 2 - 1] + v[n / 2]) / 2.0
    }
}

/// Upper median: the `(floor(N/2) + 1)`-th order statistic. Unlike [`median`]
/// it is always one of the data points.
pub fn upper_median(sample: &Sample) -> f64 {
    let v = sorted(sample);
    v[v.len() / 2]
}
