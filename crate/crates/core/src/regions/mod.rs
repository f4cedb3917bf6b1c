//! Asymptotic confidence regions around the geometric-mean estimate.
//!
//! With `R_alpha = sqrt(-ln alpha)`, the disc
//! `{ z : |z - P_N| <= sqrt(V_N/N) * R_alpha * |P_N| }` has asymptotic
//! coverage `1 - alpha`; it comes from the exponential law of the squared
//! modulus of a standard complex normal limit. The square and the
//! per-component intervals follow from the same limit componentwise, with
//! half-sizes proportional to `sqrt(V_N/(2N)) * |P_N|` times an upper normal
//! quantile: `rho_beta` with `beta = (1 - sqrt(1 - alpha))/2` for the square
//! (so that `(1 - 2 beta)^2 = 1 - alpha`), `rho_{alpha/2}` for each interval.
//!
//! All membership tests use closed inequalities, so boundary points count as
//! covered.

mod quantile;

pub use quantile::{normal_quantile_upper, student_t_cdf, student_t_quantile_upper};

use num_complex::Complex64;

use crate::estimate::EstimateResult;
use crate::{Error, Result};

/// Closed disc `|z - center| <= radius`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConfidenceDisc {
    pub center: Complex64,
    pub radius: f64,
    pub alpha: f64,
}

impl ConfidenceDisc {
    pub fn contains(&self, z: Complex64) -> bool {
        (z - self.center).norm() <= self.radius
    }

    /// The same disc shifted along the real axis (used after median
    /// subtraction).
    pub fn translated(&self, dx: f64) -> Self {
        Self {
            center: self.center + dx,
            ..*self
        }
    }
}

/// Closed axis-aligned square `max(|Re d|, |Im d|) <= half_side`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConfidenceSquare {
    pub center: Complex64,
    pub half_side: f64,
    pub alpha: f64,
}

impl ConfidenceSquare {
    pub fn contains(&self, z: Complex64) -> bool {
        (z.re - self.center.re).abs() <= self.half_side
            && (z.im - self.center.im).abs() <= self.half_side
    }

    /// The same square shifted along the real axis (used after median
    /// subtraction).
    pub fn translated(&self, dx: f64) -> Self {
        Self {
            center: self.center + dx,
            ..*self
        }
    }
}

/// Closed per-component intervals for mu (real part) and sigma (imaginary
/// part), of common half-width.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConfidenceIntervals {
    /// Interval for mu: `(low, high)`.
    pub mu: (f64, f64),
    /// Interval for sigma: `(low, high)`.
    pub sigma: (f64, f64),
    pub alpha: f64,
}

impl ConfidenceIntervals {
    /// True when both components of `z = mu + i*sigma` fall inside their
    /// intervals.
    pub fn contains(&self, z: Complex64) -> bool {
        self.contains_mu(z.re) && self.contains_sigma(z.im)
    }

    /// True when the mu interval contains `x`. Each interval has marginal
    /// level `1 - alpha` on its own; the pair holds jointly only at about
    /// `(1 - alpha)^2` (the square region is the jointly calibrated one).
    pub fn contains_mu(&self, x: f64) -> bool {
        self.mu.0 <= x && x <= self.mu.1
    }

    /// True when the sigma interval contains `s` (marginal level `1 - alpha`).
    pub fn contains_sigma(&self, s: f64) -> bool {
        self.sigma.0 <= s && s <= self.sigma.1
    }

    pub fn half_width(&self) -> f64 {
        (self.mu.1 - self.mu.0) / 2.0
    }

    /// The same intervals with the mu interval shifted along the real axis
    /// (used after median subtraction).
    pub fn translated(&self, dx: f64) -> Self {
        Self {
            mu: (self.mu.0 + dx, self.mu.1 + dx),
            ..*self
        }
    }
}

/// Which confidence region to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegionKind {
    Disc,
    Square,
    Intervals,
}

/// A confidence region of any of the three kinds.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Region {
    Disc(ConfidenceDisc),
    Square(ConfidenceSquare),
    Intervals(ConfidenceIntervals),
}

impl Region {
    pub fn kind(&self) -> RegionKind {
        match self {
            Region::Disc(_) => RegionKind::Disc,
            Region::Square(_) => RegionKind::Square,
            Region::Intervals(_) => RegionKind::Intervals,
        }
    }

    pub fn alpha(&self) -> f64 {
        match self {
            Region::Disc(d) => d.alpha,
            Region::Square(s) => s.alpha,
            Region::Intervals(i) => i.alpha,
        }
    }

    pub fn contains(&self, z: Complex64) -> bool {
        match self {
            Region::Disc(d) => d.contains(z),
            Region::Square(s) => s.contains(z),
            Region::Intervals(i) => i.contains(z),
        }
    }

    pub fn translated(&self, dx: f64) -> Self {
        match self {
            Region::Disc(d) => Region::Disc(d.translated(dx)),
            Region::Square(s) => Region::Square(s.translated(dx)),
            Region::Intervals(i) => Region::Intervals(i.translated(dx)),
        }
    }
}

/// Confidence disc of asymptotic level `1 - alpha`:
/// radius `sqrt(V_N/N) * sqrt(-ln alpha) * |P_N|`.
///
/// `alpha` may be 1 (the degenerate zero-radius disc); it must be in `(0, 1]`.
pub fn confidence_disc(est: &EstimateResult, alpha: f64) -> Result<ConfidenceDisc> {
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(Error::AlphaDomain(alpha));
    }
    // alpha = 1 must give radius +0.0, not -0.0 = sqrt(-ln 1)
    let r_alpha = if alpha >= 1.0 {
        0.0
    } else {
        (-alpha.ln()).sqrt()
    };
    let radius = (est.v_n / est.n as f64).sqrt() * r_alpha * est.p_n.norm();
    Ok(ConfidenceDisc {
        center: est.p_n,
        radius,
        alpha,
    })
}

/// Confidence square of asymptotic level `1 - alpha`: half-side
/// `sqrt(V_N/(2N)) * |P_N| * rho_beta` with `beta = (1 - sqrt(1 - alpha))/2`.
pub fn confidence_square(est: &EstimateResult, alpha: f64) -> Result<ConfidenceSquare> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::AlphaDomain(alpha));
    }
    let beta = (1.0 - (1.0 - alpha).sqrt()) / 2.0;
    let half_side = component_scale(est) * normal_quantile_upper(beta)?;
    Ok(ConfidenceSquare {
        center: est.p_n,
        half_side,
        alpha,
    })
}

/// Marginal confidence intervals for mu and sigma, each of asymptotic level
/// `1 - alpha`: half-width `sqrt(V_N/(2N)) * |P_N| * rho_{alpha/2}` around
/// `Re P_N` and `Im P_N`.
pub fn confidence_intervals(est: &EstimateResult, alpha: f64) -> Result<ConfidenceIntervals> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::AlphaDomain(alpha));
    }
    let hw = component_scale(est) * normal_quantile_upper(alpha / 2.0)?;
    Ok(ConfidenceIntervals {
        mu: (est.p_n.re - hw, est.p_n.re + hw),
        sigma: (est.p_n.im - hw, est.p_n.im + hw),
        alpha,
    })
}

/// Builds the region of the requested kind.
pub fn region(est: &EstimateResult, kind: RegionKind, alpha: f64) -> Result<Region> {
    Ok(match kind {
        RegionKind::Disc => Region::Disc(confidence_disc(est, alpha)?),
        RegionKind::Square => Region::Square(confidence_square(est, alpha)?),
        RegionKind::Intervals => Region::Intervals(confidence_intervals(est, alpha)?),
    })
}

/// Common componentwise scale `sqrt(V_N/(2N)) * |P_N|`.
fn component_scale(est: &EstimateResult) -> f64 {
    (est.v_n / (2.0 * est.n as f64)).sqrt() * est.p_n.norm()
}
