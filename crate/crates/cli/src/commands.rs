//! Implementations of the five subcommands. Each returns the text to print;
//! `simulate` returns `None` when it wrote its output to a file.

use cauchydisc_core::estimate::{estimate as estimate_gamma, Sample, VFormula};
use cauchydisc_core::mc::{
    coverage as run_coverage, median_shift_pipeline, outlier_experiment, sample_cauchy,
    sample_gaussian, IntervalVariant, MedianKind, SeedSpec,
};
use cauchydisc_core::moments::{
    expected_abs_pow, expected_pow, expected_pow_positive, log_moments, CauchyParams,
};
use cauchydisc_core::oracle::{cauchy_expect, Integrand};
use cauchydisc_core::regions::{region, RegionKind};
use cauchydisc_core::Complex64;

use crate::args::{
    CoverageArgs, DistArg, EstimateArgs, FormatArg, MedianArg, MomentsArgs, OutlierArgs, RegionArg,
    RegionOneArg, SimulateArgs, VFormulaArg,
};
use crate::doc::{
    sig6, to_json, CheckRepr, CoverageDoc, GammaInfo, LogMomentsRepr, MomentsDoc, PowerRepr,
    ResultDocument, VerifyRepr, TOOL_VERSION,
};
use crate::{data, svg, CliError, Result};

impl From<VFormulaArg> for VFormula {
    fn from(v: VFormulaArg) -> Self {
        match v {
            VFormulaArg::Corrected => VFormula::Corrected,
            VFormulaArg::Paper => VFormula::Paper,
        }
    }
}

impl From<RegionOneArg> for RegionKind {
    fn from(r: RegionOneArg) -> Self {
        match r {
            RegionOneArg::Disc => RegionKind::Disc,
            RegionOneArg::Square => RegionKind::Square,
            RegionOneArg::Intervals => RegionKind::Intervals,
        }
    }
}

fn kinds_of(arg: RegionArg) -> Vec<RegionKind> {
    match arg {
        RegionArg::Disc => vec![RegionKind::Disc],
        RegionArg::Square => vec![RegionKind::Square],
        RegionArg::Intervals => vec![RegionKind::Intervals],
        RegionArg::All => vec![RegionKind::Disc, RegionKind::Square, RegionKind::Intervals],
    }
}

pub fn estimate(args: &EstimateArgs) -> Result<String> {
    let values = data::read_values(&args.input)?;
    if values.len() < 2 {
        return Err(CliError::Domain(format!(
            "need at least 2 data values, found {}",
            values.len()
        )));
    }
    let sample = Sample::new(values)?;
    let v_formula: VFormula = args.v_formula.into();
    let kinds = kinds_of(args.region);

    let (est, regions, median, degenerate) = match args.subtract_median {
        MedianArg::Off => {
            let est = estimate_gamma(&sample, v_formula)?;
            let regions = kinds
                .iter()
                .map(|&k| region(&est, k, args.alpha))
                .collect::<cauchydisc_core::Result<Vec<_>>>()?;
            (est, regions, None, None)
        }
        MedianArg::Paired | MedianArg::Upper => {
            let kind = match args.subtract_median {
                MedianArg::Paired => MedianKind::PairedAverage,
                _ => MedianKind::UpperOrderStat,
            };
            let shift = median_shift_pipeline(&sample, args.alpha, kind, v_formula)?;
            // In the degenerate case v_n = 0, so building directly from the
            // collapsed estimate yields zero-size regions at the median.
            let regions = match &shift.shifted {
                Some(raw) => kinds
                    .iter()
                    .map(|&k| Ok(region(raw, k, args.alpha)?.translated(shift.median)))
                    .collect::<cauchydisc_core::Result<Vec<_>>>()?,
                None => kinds
                    .iter()
                    .map(|&k| region(&shift.estimate, k, args.alpha))
                    .collect::<cauchydisc_core::Result<Vec<_>>>()?,
            };
            (
                shift.estimate,
                regions,
                Some(shift.median),
                Some(shift.degenerate),
            )
        }
    };

    let truth = match &args.truth {
        Some(pair) => {
            if pair.iter().any(|t| !t.is_finite()) {
                return Err(CliError::Domain("--truth values must be finite".into()));
            }
            Some(Complex64::new(pair[0], pair[1]))
        }
        None => None,
    };

    let document = ResultDocument::new(&est, &regions, args.alpha, median, degenerate);
    match args.format {
        FormatArg::Json => Ok(to_json(&document)),
        FormatArg::Csv => Ok(document.to_csv()),
        FormatArg::Svg => {
            let title = format!(
                "n={} alpha={} center=({},{})",
                est.n,
                sig6(args.alpha),
                sig6(est.p_n.re),
                sig6(est.p_n.im)
            );
            Ok(svg::render(&regions, est.p_n, truth, &title))
        }
    }
}

pub fn simulate(args: &SimulateArgs) -> Result<Option<String>> {
    if args.n < 2 {
        return Err(CliError::Domain(format!(
            "need --n of at least 2 to produce an estimable data file, got {}",
            args.n
        )));
    }
    let sample = match args.dist {
        DistArg::Cauchy => {
            let gamma = CauchyParams::new(args.mu, args.sigma)?;
            sample_cauchy(&gamma, args.n, args.seed)?
        }
        DistArg::Gaussian => sample_gaussian(args.mu, args.sigma, args.n, args.seed)?,
    };
    let mut values = sample.values().to_vec();
    if let Some(v) = args.replace_last {
        if !v.is_finite() || v == 0.0 {
            return Err(CliError::Domain(format!(
                "--replace-last must be finite and nonzero, got {v}"
            )));
        }
        *values.last_mut().expect("n >= 2") = v;
    }
    let dist = match args.dist {
        DistArg::Cauchy => "cauchy",
        DistArg::Gaussian => "gaussian",
    };
    let mut header = vec![
        "cauchydisc data file".to_string(),
        format!(
            "dist={dist} mu={} sigma={} n={} seed={}",
            args.mu, args.sigma, args.n, args.seed
        ),
    ];
    if let Some(v) = args.replace_last {
        header.push(format!("replace_last={v}"));
    }
    let text = data::format_data_file(&header, &values);
    match &args.out {
        Some(path) => {
            data::write_text(path, &text)?;
            Ok(None)
        }
        None => Ok(Some(text)),
    }
}

pub fn coverage(args: &CoverageArgs) -> Result<String> {
    let gamma = CauchyParams::new(args.mu, args.sigma)?;
    let report = run_coverage(
        &gamma,
        args.n,
        args.trials,
        args.alpha,
        args.region.into(),
        args.v_formula.into(),
        SeedSpec::new(args.seed),
    )?;
    Ok(to_json(&CoverageDoc::from(&report)))
}

fn complex_check(
    name: &'static str,
    analytic: Complex64,
    params: &CauchyParams,
    integrand: Integrand,
    tol: f64,
) -> Result<CheckRepr> {
    let oracle = cauchy_expect(&integrand, params, tol)?;
    let rel_err = (analytic - oracle.value).norm() / analytic.norm().max(1.0);
    Ok(CheckRepr {
        name,
        analytic: analytic.into(),
        oracle: oracle.value.into(),
        rel_err,
        evaluations: oracle.evaluations,
    })
}

fn real_check(
    name: &'static str,
    analytic: f64,
    params: &CauchyParams,
    integrand: Integrand,
    tol: f64,
) -> Result<CheckRepr> {
    complex_check(name, Complex64::new(analytic, 0.0), params, integrand, tol)
}

pub fn moments(args: &MomentsArgs) -> Result<String> {
    let params = CauchyParams::new(args.mu, args.sigma)?;
    let lm = log_moments(&params);
    let power = match args.p {
        Some(p) => Some(PowerRepr {
            p,
            pow: expected_pow(&params, p)?.into(),
            pow_positive: expected_pow_positive(&params, p)?,
            abs_pow: expected_abs_pow(&params, p)?,
        }),
        None => None,
    };
    let verify = match args.verify {
        Some(tol) => {
            let mut checks = vec![
                real_check("log_abs", lm.e_log_abs, &params, Integrand::LogAbs, tol)?,
                real_check(
                    "log_abs_sq",
                    lm.e_log_abs_sq,
                    &params,
                    Integrand::LogAbsSq,
                    tol,
                )?,
                real_check(
                    "positive_mass",
                    expected_pow_positive(&params, 0.0)?,
                    &params,
                    Integrand::IndicatorPositive,
                    tol,
                )?,
                complex_check(
                    "log_properness",
                    Complex64::new(0.0, 0.0),
                    &params,
                    Integrand::LogComplexSq,
                    tol,
                )?,
            ];
            if let Some(p) = args.p {
                checks.push(complex_check(
                    "pow",
                    expected_pow(&params, p)?,
                    &params,
                    Integrand::Pow(p),
                    tol,
                )?);
                checks.push(real_check(
                    "pow_positive",
                    expected_pow_positive(&params, p)?,
                    &params,
                    Integrand::PowPositive(p),
                    tol,
                )?);
                checks.push(real_check(
                    "abs_pow",
                    expected_abs_pow(&params, p)?,
                    &params,
                    Integrand::AbsPow(p),
                    tol,
                )?);
            }
            let max_rel_err = checks.iter().map(|c| c.rel_err).fold(0.0, f64::max);
            Some(VerifyRepr {
                tol,
                checks,
                max_rel_err,
            })
        }
        None => None,
    };
    let document = MomentsDoc {
        gamma: GammaInfo {
            mu: params.mu(),
            sigma: params.sigma(),
            abs: params.abs_gamma(),
            arg: params.arg_gamma(),
        },
        log_moments: LogMomentsRepr {
            e_log_abs: lm.e_log_abs,
            e_log_abs_sq: lm.e_log_abs_sq,
            var_log_abs: lm.var_log_abs,
            var_log: lm.var_log,
        },
        power,
        verify,
        tool_version: TOOL_VERSION,
    };
    Ok(to_json(&document))
}

pub fn outlier(args: &OutlierArgs) -> Result<String> {
    let rows = outlier_experiment(
        args.samples,
        args.n,
        args.outlier,
        args.alpha,
        SeedSpec::new(args.seed),
    )?;
    let mut lines = vec!["sample,variant,contaminated,center,radius,low,high".to_string()];
    for row in &rows {
        let variant = match row.variant {
            IntervalVariant::TBased => "t",
            IntervalVariant::GmBased => "gm",
        };
        lines.push(format!(
            "{},{},{},{},{},{},{}",
            row.sample_index,
            variant,
            row.contaminated,
            sig6(row.center),
            sig6(row.radius),
            sig6(row.interval.0),
            sig6(row.interval.1)
        ));
    }
    Ok(lines.join("\n"))
}
