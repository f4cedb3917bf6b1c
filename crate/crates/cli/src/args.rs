//! Command-line grammar. Only structure lives here; validation that depends
//! on values (alpha ranges, sample sizes) happens in the command bodies so
//! that it maps to exit code 3 rather than clap's usage error.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "cauchydisc", version, about = "Cauchy parameter estimation via complex geometric means", long_about = None)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Estimate gamma = mu + i sigma from a data file and print a confidence region
    Estimate(EstimateArgs),
    /// Draw a Cauchy or Gaussian sample and write it as a data file
    Simulate(SimulateArgs),
    /// Measure empirical coverage of the confidence regions by Monte Carlo
    Coverage(CoverageArgs),
    /// Print closed-form moments, optionally cross-checked by quadrature
    Moments(MomentsArgs),
    /// Compare t-based and geometric-mean intervals under an injected outlier
    Outlier(OutlierArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RegionArg {
    Disc,
    Square,
    Intervals,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RegionOneArg {
    Disc,
    Square,
    Intervals,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VFormulaArg {
    Corrected,
    Paper,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MedianArg {
    Off,
    Paired,
    Upper,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Json,
    Csv,
    Svg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DistArg {
    Cauchy,
    Gaussian,
}

#[derive(Debug, Args)]
pub struct EstimateArgs {
    /// Input data file: one value per line, blank lines and # comments allowed
    #[arg(long)]
    pub input: PathBuf,
    /// Asymptotic miss probability of the region
    #[arg(long, default_value_t = 0.05, allow_negative_numbers = true)]
    pub alpha: f64,
    #[arg(long, value_enum, default_value_t = RegionArg::Disc)]
    pub region: RegionArg,
    /// Denominator convention for the log-variance V_N
    #[arg(long, value_enum, default_value_t = VFormulaArg::Corrected)]
    pub v_formula: VFormulaArg,
    /// Subtract a sample median before estimating, translating back afterwards
    #[arg(long, value_enum, default_value_t = MedianArg::Off)]
    pub subtract_median: MedianArg,
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    pub format: FormatArg,
    /// True parameter, marked in SVG output and tested for region membership
    #[arg(long, num_args = 2, value_names = ["MU", "SIGMA"], allow_negative_numbers = true)]
    pub truth: Option<Vec<f64>>,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    #[arg(value_enum)]
    pub dist: DistArg,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub mu: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub sigma: f64,
    /// Sample size (at least 2, so the output is estimable)
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Output path; stdout when omitted
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Replace the last datum with this value after drawing
    #[arg(long, value_name = "VALUE", allow_negative_numbers = true)]
    pub replace_last: Option<f64>,
}

#[derive(Debug, Args)]
pub struct CoverageArgs {
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub mu: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub sigma: f64,
    /// Sample size per trial
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub trials: usize,
    #[arg(long, default_value_t = 0.05, allow_negative_numbers = true)]
    pub alpha: f64,
    /// Region kind to score; for intervals the scored event is the location
    /// interval containing the true mu (its marginal level is 1 - alpha)
    #[arg(long, value_enum, default_value_t = RegionOneArg::Disc)]
    pub region: RegionOneArg,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = VFormulaArg::Corrected)]
    pub v_formula: VFormulaArg,
}

#[derive(Debug, Args)]
pub struct MomentsArgs {
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub mu: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub sigma: f64,
    /// Also report the power moments E[X^p], E[X^p; X>0], E[|X|^p] (|p| < 1)
    #[arg(long, allow_negative_numbers = true)]
    pub p: Option<f64>,
    /// Re-derive every reported moment by quadrature at this tolerance
    #[arg(long, value_name = "TOL")]
    pub verify: Option<f64>,
}

#[derive(Debug, Args)]
pub struct OutlierArgs {
    /// Number of independent Gaussian samples
    #[arg(long, default_value_t = 10)]
    pub samples: usize,
    /// Size of each sample
    #[arg(long, default_value_t = 100)]
    pub n: usize,
    /// Value written over the last datum of the contaminated copy
    #[arg(long, default_value_t = 5.0, allow_negative_numbers = true)]
    pub outlier: f64,
    #[arg(long, default_value_t = 0.05, allow_negative_numbers = true)]
    pub alpha: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}
