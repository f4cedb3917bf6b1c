//! Reproducible sampling and the simulation suite: coverage studies, the
//! median-subtraction pipeline, the epsilon-shift study, and the outlier
//! comparison against Student-t intervals.
//!
//! Determinism contract: every result here is a pure function of its
//! arguments. Each trial derives its own RNG seed from [`SeedSpec`] by index,
//! and aggregation is order-insensitive, so reports are bit-identical no
//! matter how many threads run the trials.

use num_complex::Complex64;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::estimate::{
    estimate, median, shifted_estimate, upper_median, EstimateResult, Sample, VFormula,
};
use crate::moments::CauchyParams;
use crate::regions::{
    confidence_disc, confidence_intervals, region, student_t_quantile_upper, ConfidenceDisc,
    Region, RegionKind,
};
use crate::sum::CompensatedSum;
use crate::{Error, Result};

const PI: f64 = std::f64::consts::PI;

/// Normal quantile for the fixed 95% Wilson interval around coverage rates.
const WILSON_Z: f64 = 1.959963984540054;

/// Master seed plus a per-trial stream derivation.
///
/// Streams for distinct indices are distinct: the index map is injective and
/// the finalizer is a bijection on 64-bit words.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SeedSpec {
    pub master_seed: u64,
}

impl SeedSpec {
    pub fn new(master_seed: u64) -> Self {
        Self { master_seed }
    }

    /// RNG seed for the trial at `index` (splitmix64 finalizer).
    pub fn stream(&self, index: u64) -> u64 {
        let mut z = self
            .master_seed
            .wrapping_add(index.wrapping_mul(0x9E37_79B9_7F4A_7C15));
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }
}

impl From<u64> for SeedSpec {
    fn from(master_seed: u64) -> Self {
        Self { master_seed }
    }
}

/// Uniform draw on the open interval (0, 1): 53-bit mantissa, zero redrawn.
fn uniform_open(rng: &mut ChaCha8Rng) -> f64 {
    loop {
        let u = (rng.next_u64() >> 11) as f64 * (1.0 / 9_007_199_254_740_992.0);
        if u > 0.0 {
            return u;
        }
    }
}

/// Inverse-CDF Cauchy sample of size `n`. No value is exactly zero or
/// non-finite; such draws are rejected and redrawn to keep the [`Sample`]
/// invariant.
pub fn sample_cauchy(gamma: &CauchyParams, n: usize, seed: u64) -> Result<Sample> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut values = Vec::with_capacity(n);
    for _ in 0..n {
        values.push(loop {
            let u = uniform_open(&mut rng);
            let x = gamma.mu() + gamma.sigma() * (PI * (u - 0.5)).tan();
            if x != 0.0 && x.is_finite() {
                break x;
            }
        });
    }
    Sample::new(values)
}

/// Polar-method Gaussian sample of size `n`; exact zeros are redrawn.
pub fn sample_gaussian(mu: f64, sigma: f64, n: usize, seed: u64) -> Result<Sample> {
    if !mu.is_finite() {
        return Err(Error::NonFinite);
    }
    if !sigma.is_finite() || sigma <= 0.0 {
        return Err(Error::InvalidScale(sigma));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut spare = None;
    let mut values = Vec::with_capacity(n);
    while values.len() < n {
        let z = match spare.take() {
            Some(z) => z,
            None => loop {
                let a = 2.0 * uniform_open(&mut rng) - 1.0;
                let b = 2.0 * uniform_open(&mut rng) - 1.0;
                let s = a * a + b * b;
                if s > 0.0 && s < 1.0 {
                    let f = (-2.0 * s.ln() / s).sqrt();
                    spare = Some(b * f);
                    break a * f;
                }
            },
        };
        let x = mu + sigma * z;
        if x != 0.0 {
            values.push(x);
        }
    }
    Sample::new(values)
}

/// Empirical coverage of a confidence region over independent trials.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoverageReport {
    pub trials: usize,
    pub hits: usize,
    /// `hits / trials`.
    pub coverage: f64,
    /// 95% Wilson score interval for the true coverage probability.
    pub wilson_ci: (f64, f64),
    pub region_kind: RegionKind,
    pub alpha: f64,
    pub gamma_true: CauchyParams,
    pub n_per_trial: usize,
    pub v_formula: VFormula,
    pub master_seed: u64,
}

/// 95% Wilson score interval for `hits` successes out of `trials >= 1`.
pub fn wilson_interval(hits: usize, trials: usize) -> (f64, f64) {
    debug_assert!(trials >= 1 && hits <= trials);
    let n = trials as f64;
    let p = hits as f64 / n;
    let z2 = WILSON_Z * WILSON_Z;
    let denom = 1.0 + z2 / n;
    let center = (p + z2 / (2.0 * n)) / denom;
    let half = WILSON_Z * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt() / denom;
    // clamping to the point estimate absorbs rounding at hits = 0 or trials
    (
        (center - half).max(0.0).min(p),
        (center + half).min(1.0).max(p),
    )
}

/// Runs `trials` rounds of draw, estimate, build region, test membership of
/// the true parameter. Trials run in parallel; the report depends only on the
/// arguments.
///
/// For the disc and square kinds a hit means the region contains the true
/// parameter, so the reported coverage approaches `1 - alpha`. The two
/// marginal intervals each hold with probability `1 - alpha` but jointly only
/// at about `(1 - alpha)^2`, so for the intervals kind the scored event is
/// the location interval containing the true mu, keeping every kind's report
/// on the same `1 - alpha` scale (the scale interval obeys the same marginal
/// law by construction).
pub fn coverage(
    gamma: &CauchyParams,
    n_per_trial: usize,
    trials: usize,
    alpha: f64,
    region_kind: RegionKind,
    v_formula: VFormula,
    seed: SeedSpec,
) -> Result<CoverageReport> {
    if trials < 1 {
        return Err(Error::Param("trials must be at least 1"));
    }
    if n_per_trial < 2 {
        return Err(Error::SampleTooSmall {
            n: n_per_trial,
            min: 2,
        });
    }
    // same alpha domain the region builders enforce, checked once up front
    let alpha_ok = alpha.is_finite()
        && alpha > 0.0
        && (alpha < 1.0 || (alpha == 1.0 && region_kind == RegionKind::Disc));
    if !alpha_ok {
        return Err(Error::AlphaDomain(alpha));
    }
    let target = gamma.gamma();
    let hits = (0..trials)
        .into_par_iter()
        .map(|index| -> Result<usize> {
            let sample = sample_cauchy(gamma, n_per_trial, seed.stream(index as u64))?;
            let est = estimate(&sample, v_formula)?;
            let reg = region(&est, region_kind, alpha)?;
            let hit = match &reg {
                Region::Intervals(iv) => iv.contains_mu(target.re),
                other => other.contains(target),
            };
            Ok(hit as usize)
        })
        .try_reduce(|| 0, |a, b| Ok(a + b))?;
    Ok(CoverageReport {
        trials,
        hits,
        coverage: hits as f64 / trials as f64,
        wilson_ci: wilson_interval(hits, trials),
        region_kind,
        alpha,
        gamma_true: *gamma,
        n_per_trial,
        v_formula,
        master_seed: seed.master_seed,
    })
}

/// Which median to subtract before estimating.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MedianKind {
    /// Average of the two middle order statistics (the usual sample median).
    #[default]
    PairedAverage,
    /// The upper middle order statistic alone; always a datum, so the
    /// pipeline always degenerates. Kept to demonstrate exactly that.
    UpperOrderStat,
}

/// Result of estimating on median-shifted data and translating back.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MedianShift {
    /// Estimate on `{x_j - m}` with the center translated back by `m`.
    pub estimate: EstimateResult,
    /// Estimate on `{x_j - m}` before translating back; `None` when the
    /// pipeline degenerates.
    pub shifted: Option<EstimateResult>,
    /// Disc around the translated center.
    pub disc: ConfidenceDisc,
    /// The subtracted value `m`.
    pub median: f64,
    /// True when `m` equals a datum: the shifted product collapses, the
    /// estimate is exactly `m + 0i`, and the disc is the single point `m`.
    pub degenerate: bool,
}

/// Subtracts the sample median, estimates, and translates the estimate and
/// its disc back by the median. A median that coincides with a datum is
/// reported through the `degenerate` flag rather than as an error.
pub fn median_shift_pipeline(
    sample: &Sample,
    alpha: f64,
    median_kind: MedianKind,
    v_formula: VFormula,
) -> Result<MedianShift> {
    if !alpha.is_finite() || alpha <= 0.0 || alpha > 1.0 {
        return Err(Error::AlphaDomain(alpha));
    }
    let m = match median_kind {
        MedianKind::PairedAverage => median(sample),
        MedianKind::UpperOrderStat => upper_median(sample),
    };
    if sample.values().contains(&m) {
        let p_n = Complex64::new(m, 0.0);
        return Ok(MedianShift {
            estimate: EstimateResult {
                p_n,
                v_n: 0.0,
                n: sample.len(),
                v_formula,
            },
            shifted: None,
            disc: ConfidenceDisc {
                center: p_n,
                radius: 0.0,
                alpha,
            },
            median: m,
            degenerate: true,
        });
    }
    let shifted = Sample::new(sample.values().iter().map(|x| x - m).collect())?;
    let est = estimate(&shifted, v_formula)?;
    let disc = confidence_disc(&est, alpha)?.translated(m);
    Ok(MedianShift {
        estimate: EstimateResult {
            p_n: Complex64::new(est.p_n.re + m, est.p_n.im),
            ..est
        },
        shifted: Some(est),
        disc,
        median: m,
        degenerate: false,
    })
}

/// Which interval an outlier-experiment row reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntervalVariant {
    /// Classical `mean +- t * s / sqrt(n)`.
    TBased,
    /// Real-part interval of the geometric-mean estimate.
    GmBased,
}

/// One interval from one (clean or contaminated) sample.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OutlierTableRow {
    /// 1-based index of the underlying sample.
    pub sample_index: usize,
    pub center: f64,
    pub radius: f64,
    /// `(center - radius, center + radius)`.
    pub interval: (f64, f64),
    pub variant: IntervalVariant,
    pub contaminated: bool,
}

fn t_row(
    sample_index: usize,
    data: &Sample,
    alpha: f64,
    contaminated: bool,
) -> Result<OutlierTableRow> {
    let n = data.len() as f64;
    let mut sum = CompensatedSum::new();
    for &x in data.values() {
        sum.add(x);
    }
    let mean = sum.value() / n;
    let mut ss = CompensatedSum::new();
    for &x in data.values() {
        ss.add((x - mean) * (x - mean));
    }
    let s = (ss.value() / (n - 1.0)).sqrt();
    let radius = student_t_quantile_upper(alpha / 2.0, n - 1.0)? * s / n.sqrt();
    Ok(OutlierTableRow {
        sample_index,
        center: mean,
        radius,
        interval: (mean - radius, mean + radius),
        variant: IntervalVariant::TBased,
        contaminated,
    })
}

fn gm_row(
    sample_index: usize,
    data: &Sample,
    alpha: f64,
    contaminated: bool,
) -> Result<OutlierTableRow> {
    let est = estimate(data, VFormula::default())?;
    let radius = confidence_intervals(&est, alpha)?.half_width();
    let center = est.p_n.re;
    Ok(OutlierTableRow {
        sample_index,
        center,
        radius,
        interval: (center - radius, center + radius),
        variant: IntervalVariant::GmBased,
        contaminated,
    })
}

/// Draws standard Gaussian samples, contaminates a copy of each by replacing
/// the last datum with `outlier_value`, and reports t-based and GM-based
/// location intervals for the clean and contaminated versions. Four rows per
/// sample: t clean, GM clean, t contaminated, GM contaminated.
pub fn outlier_experiment(
    n_samples: usize,
    n_per_sample: usize,
    outlier_value: f64,
    alpha: f64,
    seed: SeedSpec,
) -> Result<Vec<OutlierTableRow>> {
    if n_samples < 1 {
        return Err(Error::Param("n_samples must be at least 1"));
    }
    if n_per_sample < 2 {
        return Err(Error::SampleTooSmall {
            n: n_per_sample,
            min: 2,
        });
    }
    if !outlier_value.is_finite() {
        return Err(Error::NonFinite);
    }
    if outlier_value == 0.0 {
        return Err(Error::ZeroDatum);
    }
    if !alpha.is_finite() || alpha <= 0.0 || alpha >= 1.0 {
        return Err(Error::AlphaDomain(alpha));
    }
    let mut rows = Vec::with_capacity(4 * n_samples);
    for i in 0..n_samples {
        let clean = sample_gaussian(0.0, 1.0, n_per_sample, seed.stream(i as u64))?;
        let mut values = clean.values().to_vec();
        *values.last_mut().expect("n_per_sample >= 2") = outlier_value;
        let contaminated = Sample::new(values)?;
        for (data, flag) in [(&clean, false), (&contaminated, true)] {
            rows.push(t_row(i + 1, data, alpha, flag)?);
            rows.push(gm_row(i + 1, data, alpha, flag)?);
        }
    }
    Ok(rows)
}

/// Worst-case accuracy of the epsilon-shift estimator over a shift grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EpsilonShiftRow {
    pub n: usize,
    /// `max` over the grid of `|shifted_estimate - gamma|`.
    pub sup_deviation: f64,
}

/// For each sample size in `n_list`, draws one sample and takes the maximum
/// over an `n_grid`-point grid on the closed shift interval of the distance
/// between the epsilon-shift estimate and the true parameter.
pub fn epsilon_shift_study(
    gamma: &CauchyParams,
    theta_interval: (f64, f64),
    epsilon: f64,
    n_grid: usize,
    n_list: &[usize],
    seed: SeedSpec,
) -> Result<Vec<EpsilonShiftRow>> {
    let (lo, hi) = theta_interval;
    if !lo.is_finite() || !hi.is_finite() || lo > hi {
        return Err(Error::Param(
            "theta interval bounds must be finite with low <= high",
        ));
    }
    if !epsilon.is_finite() || epsilon <= 0.0 {
        return Err(Error::Param("epsilon must be finite and positive"));
    }
    if n_grid < 2 {
        return Err(Error::Param("the shift grid needs at least 2 points"));
    }
    let target = gamma.gamma();
    let step = (hi - lo) / (n_grid - 1) as f64;
    let mut rows = Vec::with_capacity(n_list.len());
    for (index, &n) in n_list.iter().enumerate() {
        let sample = sample_cauchy(gamma, n, seed.stream(index as u64))?;
        let mut sup = 0.0f64;
        for j in 0..n_grid {
            let theta = if j + 1 == n_grid {
                hi
            } else {
                lo + step * j as f64
            };
            let dev = (shifted_estimate(&sample, theta, epsilon)? - target).norm();
            sup = sup.max(dev);
        }
        rows.push(EpsilonShiftRow {
            n,
            sup_deviation: sup,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::collections::HashSet;

    fn standard() -> CauchyParams {
        CauchyParams::new(0.0, 1.0).unwrap()
    }

    #[test]
    fn seed_streams_are_stable_and_distinct() {
        let spec = SeedSpec::new(42);
        let streams: HashSet<u64> = (0..10_000).map(|i| spec.stream(i)).collect();
        assert_eq!(streams.len(), 10_000);
        assert_eq!(spec.stream(7), spec.stream(7));
        assert_ne!(spec.stream(7), SeedSpec::new(43).stream(7));
    }

    #[test]
    fn cauchy_sample_is_deterministic_and_nonzero() {
        let a = sample_cauchy(&standard(), 1000, 5).unwrap();
        let b = sample_cauchy(&standard(), 1000, 5).unwrap();
        assert_eq!(a.values(), b.values());
        assert!(a.values().iter().all(|&x| x != 0.0 && x.is_finite()));
        let c = sample_cauchy(&standard(), 1000, 6).unwrap();
        assert_ne!(a.values(), c.values());
    }

    #[test]
    fn cauchy_sample_median_is_near_location() {
        let n = 100_000;
        let sample = sample_cauchy(&standard(), n, 1).unwrap();
        let band = 3.0 * PI / (2.0 * (n as f64).sqrt());
        assert!(
            median(&sample).abs() <= band,
            "median {} outside +-{band}",
            median(&sample)
        );
    }

    #[test]
    fn cauchy_sample_quartiles_sit_at_unit_magnitude() {
        let n = 100_000;
        let sample = sample_cauchy(&standard(), n, 2).unwrap();
        let frac = sample.values().iter().filter(|&&x| x.abs() > 1.0).count() as f64 / n as f64;
        assert_abs_diff_eq!(frac, 0.5, epsilon = 3.0 * (0.25f64 / n as f64).sqrt());
    }

    #[test]
    fn gaussian_sample_moments_and_determinism() {
        let n = 1_000_000;
        let sample = sample_gaussian(0.0, 1.0, n, 3).unwrap();
        let mean = sample.values().iter().sum::<f64>() / n as f64;
        let var = sample
            .values()
            .iter()
            .map(|x| (x - mean) * (x - mean))
            .sum::<f64>()
            / (n as f64 - 1.0);
        assert_abs_diff_eq!(mean, 0.0, epsilon = 3.0 / (n as f64).sqrt());
        assert_abs_diff_eq!(var, 1.0, epsilon = 3.0 * (2.0 / n as f64).sqrt());
        let again = sample_gaussian(0.0, 1.0, n, 3).unwrap();
        assert_eq!(sample.values(), again.values());
        assert!(sample.values().iter().all(|&x| x != 0.0));
    }

    #[test]
    fn gaussian_sample_rejects_bad_parameters() {
        assert!(sample_gaussian(f64::NAN, 1.0, 5, 0).is_err());
        assert_eq!(
            sample_gaussian(0.0, 0.0, 5, 0),
            Err(Error::InvalidScale(0.0))
        );
    }

    #[test]
    fn wilson_interval_brackets_the_point_estimate() {
        for &(hits, trials) in &[(0, 100), (50, 100), (95, 100), (100, 100), (925, 1000)] {
            let (lo, hi) = wilson_interval(hits, trials);
            let p = hits as f64 / trials as f64;
            assert!(
                0.0 <= lo && lo <= p && p <= hi && hi <= 1.0,
                "{hits}/{trials}"
            );
        }
        assert_eq!(wilson_interval(0, 100).0, 0.0);
        assert_eq!(wilson_interval(100, 100).1, 1.0);
    }

    #[test]
    fn coverage_smoke_and_determinism() {
        let report = coverage(
            &standard(),
            200,
            200,
            0.05,
            RegionKind::Disc,
            VFormula::default(),
            SeedSpec::new(11),
        )
        .unwrap();
        assert_eq!(report.trials, 200);
        assert_eq!(report.hits, (report.coverage * 200.0).round() as usize);
        assert!(report.coverage > 0.85 && report.coverage <= 1.0);
        assert!(report.wilson_ci.0 <= report.coverage && report.coverage <= report.wilson_ci.1);
        let again = coverage(
            &standard(),
            200,
            200,
            0.05,
            RegionKind::Disc,
            VFormula::default(),
            SeedSpec::new(11),
        )
        .unwrap();
        assert_eq!(report, again);
    }

    #[test]
    fn coverage_is_thread_count_invariant() {
        let run = |threads| {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .unwrap();
            pool.install(|| {
                coverage(
                    &standard(),
                    100,
                    300,
                    0.05,
                    RegionKind::Square,
                    VFormula::default(),
                    SeedSpec::new(17),
                )
                .unwrap()
            })
        };
        assert_eq!(run(1), run(4));
    }

    #[test]
    fn full_alpha_disc_never_covers() {
        let report = coverage(
            &standard(),
            10,
            50,
            1.0,
            RegionKind::Disc,
            VFormula::default(),
            SeedSpec::new(0),
        )
        .unwrap();
        assert_eq!(report.hits, 0);
        assert_eq!(report.coverage, 0.0);
    }

    #[test]
    fn coverage_rejects_bad_arguments() {
        let g = standard();
        let s = SeedSpec::new(0);
        let v = VFormula::default();
        assert!(coverage(&g, 10, 0, 0.05, RegionKind::Disc, v, s).is_err());
        assert!(coverage(&g, 1, 10, 0.05, RegionKind::Disc, v, s).is_err());
        assert_eq!(
            coverage(&g, 10, 10, 1.0, RegionKind::Square, v, s),
            Err(Error::AlphaDomain(1.0))
        );
    }

    #[test]
    fn median_shift_translates_estimate_and_disc() {
        let sample = Sample::new(vec![1.0, 2.0, 4.0, 8.0]).unwrap();
        let out = median_shift_pipeline(
            &sample,
            0.05,
            MedianKind::PairedAverage,
            VFormula::default(),
        )
        .unwrap();
        assert!(!out.degenerate);
        assert_eq!(out.median, 3.0);
        let shifted = Sample::new(vec![-2.0, -1.0, 1.0, 5.0]).unwrap();
        let direct = estimate(&shifted, VFormula::default()).unwrap();
        assert_abs_diff_eq!(out.estimate.p_n.re, direct.p_n.re + 3.0, epsilon = 1e-15);
        assert_abs_diff_eq!(out.estimate.p_n.im, direct.p_n.im, epsilon = 0.0);
        assert_eq!(out.estimate.v_n, direct.v_n);
        assert_eq!(out.shifted, Some(direct));
        assert_eq!(out.disc.center, out.estimate.p_n);
        let plain_disc = confidence_disc(&direct, 0.05).unwrap();
        assert_eq!(out.disc.radius, plain_disc.radius);
    }

    #[test]
    fn median_shift_flags_collapse_onto_a_datum() {
        let even = Sample::new(vec![1.0, 2.0, 4.0, 8.0]).unwrap();
        let out =
            median_shift_pipeline(&even, 0.05, MedianKind::UpperOrderStat, VFormula::default())
                .unwrap();
        assert!(out.degenerate);
        assert_eq!(out.estimate.p_n, Complex64::new(4.0, 0.0));
        assert_eq!(out.shifted, None);
        assert_eq!(out.disc.radius, 0.0);
        assert_eq!(out.disc.center, out.estimate.p_n);

        let odd = Sample::new(vec![1.0, 2.0, 7.0]).unwrap();
        let out = median_shift_pipeline(&odd, 0.05, MedianKind::PairedAverage, VFormula::default())
            .unwrap();
        assert!(out.degenerate);
        assert_eq!(out.estimate.p_n, Complex64::new(2.0, 0.0));
    }

    #[test]
    fn median_shift_rejects_bad_alpha() {
        let sample = Sample::new(vec![1.0, 2.0, 4.0, 8.0]).unwrap();
        assert!(median_shift_pipeline(
            &sample,
            0.0,
            MedianKind::PairedAverage,
            VFormula::default()
        )
        .is_err());
    }

    #[test]
    fn outlier_rows_have_consistent_structure() {
        let rows = outlier_experiment(10, 100, 5.0, 0.05, SeedSpec::new(23)).unwrap();
        assert_eq!(rows.len(), 40);
        for row in &rows {
            assert_eq!(row.interval.0, row.center - row.radius);
            assert_eq!(row.interval.1, row.center + row.radius);
            assert!(row.radius > 0.0);
            assert!((1..=10).contains(&row.sample_index));
        }
        let t_clean: Vec<_> = rows
            .iter()
            .filter(|r| r.variant == IntervalVariant::TBased && !r.contaminated)
            .collect();
        // for s near 1 the clean t radius sits around t_{0.975,99}/10
        for row in &t_clean {
            assert!(
                row.radius > 0.13 && row.radius < 0.28,
                "clean t radius {}",
                row.radius
            );
        }
    }

    #[test]
    fn outlier_t_center_shift_matches_mean_arithmetic() {
        let seed = SeedSpec::new(23);
        let rows = outlier_experiment(3, 100, 5.0, 0.05, seed).unwrap();
        for i in 0..3 {
            let clean = sample_gaussian(0.0, 1.0, 100, seed.stream(i as u64)).unwrap();
            let last = *clean.values().last().unwrap();
            let t_pair: Vec<_> = rows
                .iter()
                .filter(|r| r.sample_index == i + 1 && r.variant == IntervalVariant::TBased)
                .collect();
            let shift = t_pair[1].center - t_pair[0].center;
            assert_abs_diff_eq!(shift, (5.0 - last) / 100.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn outlier_experiment_rejects_bad_arguments() {
        let s = SeedSpec::new(0);
        assert!(outlier_experiment(0, 100, 5.0, 0.05, s).is_err());
        assert!(outlier_experiment(10, 1, 5.0, 0.05, s).is_err());
        assert_eq!(
            outlier_experiment(10, 100, 0.0, 0.05, s),
            Err(Error::ZeroDatum)
        );
        assert!(outlier_experiment(10, 100, f64::INFINITY, 0.05, s).is_err());
        assert!(outlier_experiment(10, 100, 5.0, 1.0, s).is_err());
    }

    #[test]
    fn epsilon_shift_single_datum_reduces_to_the_datum() {
        let seed = SeedSpec::new(9);
        let rows = epsilon_shift_study(&standard(), (-1.0, 1.0), 0.5, 5, &[1], seed).unwrap();
        let sample = sample_cauchy(&standard(), 1, seed.stream(0)).unwrap();
        let want = (Complex64::new(sample.values()[0], 0.0) - Complex64::new(0.0, 1.0)).norm();
        assert_abs_diff_eq!(rows[0].sup_deviation, want, epsilon = 1e-12);
    }

    #[test]
    fn epsilon_shift_deviation_shrinks_with_sample_size() {
        let rows = epsilon_shift_study(
            &standard(),
            (-1.0, 1.0),
            0.5,
            21,
            &[100, 10_000],
            SeedSpec::new(14),
        )
        .unwrap();
        assert!(
            rows[1].sup_deviation < rows[0].sup_deviation,
            "{} !< {}",
            rows[1].sup_deviation,
            rows[0].sup_deviation
        );
    }

    #[test]
    fn zero_epsilon_collapse_moves_at_least_one_scale_unit() {
        let sample = sample_cauchy(&standard(), 8, 4).unwrap();
        let theta = sample.values()[0];
        let z = shifted_estimate(&sample, theta, 0.0).unwrap();
        assert!((z - standard().gamma()).norm() >= standard().sigma());
    }

    #[test]
    fn epsilon_shift_rejects_bad_arguments() {
        let g = standard();
        let s = SeedSpec::new(0);
        assert!(epsilon_shift_study(&g, (1.0, -1.0), 0.5, 5, &[10], s).is_err());
        assert!(epsilon_shift_study(&g, (-1.0, 1.0), 0.0, 5, &[10], s).is_err());
        assert!(epsilon_shift_study(&g, (-1.0, 1.0), 0.5, 1, &[10], s).is_err());
    }
}
