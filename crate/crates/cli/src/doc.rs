//! Output documents and their serialization.
//!
//! JSON numbers are written with 17 significant digits (`{:.16e}`), enough
//! for every f64 to round-trip exactly; `estimate --format csv` uses the same
//! rendering so both formats encode identical numbers. Experiment tables
//! (`outlier`) round to 6 significant digits for readability.

use cauchydisc_core::estimate::{EstimateResult, VFormula};
use cauchydisc_core::mc::CoverageReport;
use cauchydisc_core::regions::{Region, RegionKind};
use cauchydisc_core::Complex64;
use serde::Serialize;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// 17 significant digits; parses back to the identical f64.
pub fn f17(x: f64) -> String {
    format!("{x:.16e}")
}

/// 6 significant digits in the shorter of decimal and scientific notation,
/// with trailing zeros trimmed.
pub fn sig6(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    let formatted = format!("{x:.5e}");
    let (mantissa, exp_text) = formatted
        .split_once('e')
        .expect("{:e} always has an exponent");
    let exp: i32 = exp_text.parse().expect("exponent is an integer");
    let sign = if mantissa.starts_with('-') { "-" } else { "" };
    let digits: String = mantissa.chars().filter(|c| c.is_ascii_digit()).collect();
    let trimmed_len = digits.trim_end_matches('0').len().max(1);
    if (-4..=5).contains(&exp) {
        let point = exp + 1;
        let body = if point <= 0 {
            let mut s = String::from("0.");
            for _ in 0..-point {
                s.push('0');
            }
            s.push_str(digits.trim_end_matches('0'));
            s
        } else if (point as usize) >= trimmed_len {
            digits[..point as usize].to_string()
        } else {
            format!(
                "{}.{}",
                &digits[..point as usize],
                &digits[point as usize..trimmed_len.max(point as usize)]
            )
        };
        format!("{sign}{body}")
    } else {
        let head = &digits[..1];
        let tail = &digits[1..trimmed_len];
        if tail.is_empty() {
            format!("{sign}{head}e{exp}")
        } else {
            format!("{sign}{head}.{tail}e{exp}")
        }
    }
}

struct FullPrecision;

impl serde_json::ser::Formatter for FullPrecision {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> std::io::Result<()>
    where
        W: ?Sized + std::io::Write,
    {
        write!(writer, "{value:.16e}")
    }
}

/// Compact JSON with 17-significant-digit floats.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, FullPrecision);
    value
        .serialize(&mut ser)
        .expect("documents contain only finite numbers and strings");
    String::from_utf8(buf).expect("serde_json writes UTF-8")
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct ComplexRepr {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for ComplexRepr {
    fn from(z: Complex64) -> Self {
        ComplexRepr { re: z.re, im: z.im }
    }
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct Bounds {
    pub low: f64,
    pub high: f64,
}

#[derive(Debug, Clone, Copy, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum RegionRepr {
    Disc {
        center: ComplexRepr,
        radius: f64,
        alpha: f64,
    },
    Square {
        center: ComplexRepr,
        half_side: f64,
        alpha: f64,
    },
    Intervals {
        mu: Bounds,
        sigma: Bounds,
        alpha: f64,
    },
}

impl From<&Region> for RegionRepr {
    fn from(region: &Region) -> Self {
        match region {
            Region::Disc(d) => RegionRepr::Disc {
                center: d.center.into(),
                radius: d.radius,
                alpha: d.alpha,
            },
            Region::Square(s) => RegionRepr::Square {
                center: s.center.into(),
                half_side: s.half_side,
                alpha: s.alpha,
            },
            Region::Intervals(i) => RegionRepr::Intervals {
                mu: Bounds {
                    low: i.mu.0,
                    high: i.mu.1,
                },
                sigma: Bounds {
                    low: i.sigma.0,
                    high: i.sigma.1,
                },
                alpha: i.alpha,
            },
        }
    }
}

/// The `region` key: a single object for one kind, an array for `--region all`.
#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum RegionDoc {
    One(RegionRepr),
    Many(Vec<RegionRepr>),
}

pub fn v_formula_name(v: VFormula) -> &'static str {
    match v {
        VFormula::Corrected => "corrected",
        VFormula::Paper => "paper",
    }
}

pub fn region_kind_name(k: RegionKind) -> &'static str {
    match k {
        RegionKind::Disc => "disc",
        RegionKind::Square => "square",
        RegionKind::Intervals => "intervals",
    }
}

/// Output of `estimate`.
#[derive(Debug, Serialize)]
pub struct ResultDocument {
    pub n: usize,
    pub p_n: ComplexRepr,
    pub v_n: f64,
    pub v_formula: &'static str,
    pub alpha: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub median: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degenerate: Option<bool>,
    pub region: RegionDoc,
    pub tool_version: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl ResultDocument {
    pub fn new(
        est: &EstimateResult,
        regions: &[Region],
        alpha: f64,
        median: Option<f64>,
        degenerate: Option<bool>,
    ) -> Self {
        let reprs: Vec<RegionRepr> = regions.iter().map(RegionRepr::from).collect();
        let region = if reprs.len() == 1 {
            RegionDoc::One(reprs[0])
        } else {
            RegionDoc::Many(reprs)
        };
        ResultDocument {
            n: est.n,
            p_n: est.p_n.into(),
            v_n: est.v_n,
            v_formula: v_formula_name(est.v_formula),
            alpha,
            median,
            degenerate,
            region,
            tool_version: TOOL_VERSION,
            seed: None,
        }
    }

    /// One row per region; cells that do not apply to the region kind are
    /// empty. Numbers use the same 17-digit rendering as the JSON output.
    pub fn to_csv(&self) -> String {
        let header = "n,p_n_re,p_n_im,v_n,v_formula,alpha,median,degenerate,kind,center_re,center_im,radius,half_side,mu_low,mu_high,sigma_low,sigma_high";
        let common = format!(
            "{},{},{},{},{},{},{},{}",
            self.n,
            f17(self.p_n.re),
            f17(self.p_n.im),
            f17(self.v_n),
            self.v_formula,
            f17(self.alpha),
            self.median.map(f17).unwrap_or_default(),
            self.degenerate.map(|d| d.to_string()).unwrap_or_default(),
        );
        let regions: &[RegionRepr] = match &self.region {
            RegionDoc::One(r) => std::slice::from_ref(r),
            RegionDoc::Many(rs) => rs,
        };
        let mut lines = vec![header.to_string()];
        for r in regions {
            let tail = match r {
                RegionRepr::Disc { center, radius, .. } => format!(
                    "disc,{},{},{},,,,,",
                    f17(center.re),
                    f17(center.im),
                    f17(*radius)
                ),
                RegionRepr::Square {
                    center, half_side, ..
                } => format!(
                    "square,{},{},,{},,,,",
                    f17(center.re),
                    f17(center.im),
                    f17(*half_side)
                ),
                RegionRepr::Intervals { mu, sigma, .. } => format!(
                    "intervals,,,,,{},{},{},{}",
                    f17(mu.low),
                    f17(mu.high),
                    f17(sigma.low),
                    f17(sigma.high)
                ),
            };
            lines.push(format!("{common},{tail}"));
        }
        lines.join("\n")
    }
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct GammaPoint {
    pub mu: f64,
    pub sigma: f64,
}

/// Output of `coverage`: the core report plus the tool version.
#[derive(Debug, Serialize)]
pub struct CoverageDoc {
    pub trials: usize,
    pub hits: usize,
    pub coverage: f64,
    pub wilson_ci: Bounds,
    pub region_kind: &'static str,
    pub alpha: f64,
    pub gamma_true: GammaPoint,
    pub n_per_trial: usize,
    pub v_formula: &'static str,
    pub master_seed: u64,
    pub tool_version: &'static str,
}

impl From<&CoverageReport> for CoverageDoc {
    fn from(r: &CoverageReport) -> Self {
        CoverageDoc {
            trials: r.trials,
            hits: r.hits,
            coverage: r.coverage,
            wilson_ci: Bounds {
                low: r.wilson_ci.0,
                high: r.wilson_ci.1,
            },
            region_kind: region_kind_name(r.region_kind),
            alpha: r.alpha,
            gamma_true: GammaPoint {
                mu: r.gamma_true.mu(),
                sigma: r.gamma_true.sigma(),
            },
            n_per_trial: r.n_per_trial,
            v_formula: v_formula_name(r.v_formula),
            master_seed: r.master_seed,
            tool_version: TOOL_VERSION,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct GammaInfo {
    pub mu: f64,
    pub sigma: f64,
    pub abs: f64,
    pub arg: f64,
}

#[derive(Debug, Serialize)]
pub struct LogMomentsRepr {
    pub e_log_abs: f64,
    pub e_log_abs_sq: f64,
    pub var_log_abs: f64,
    pub var_log: f64,
}

#[derive(Debug, Serialize)]
pub struct PowerRepr {
    pub p: f64,
    pub pow: ComplexRepr,
    pub pow_positive: f64,
    pub abs_pow: f64,
}

/// One analytic-vs-quadrature comparison. `rel_err` is
/// `|analytic - oracle| / max(1, |analytic|)`, so it degrades to an absolute
/// error when the analytic value sits near zero.
#[derive(Debug, Serialize)]
pub struct CheckRepr {
    pub name: &'static str,
    pub analytic: ComplexRepr,
    pub oracle: ComplexRepr,
    pub rel_err: f64,
    pub evaluations: usize,
}

#[derive(Debug, Serialize)]
pub struct VerifyRepr {
    pub tol: f64,
    pub checks: Vec<CheckRepr>,
    pub max_rel_err: f64,
}

/// Output of `moments`.
#[derive(Debug, Serialize)]
pub struct MomentsDoc {
    pub gamma: GammaInfo,
    pub log_moments: LogMomentsRepr,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub power: Option<PowerRepr>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verify: Option<VerifyRepr>,
    pub tool_version: &'static str,
}
