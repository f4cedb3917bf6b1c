//! Scalar quantile functions behind the confidence regions.
//!
//! The upper normal quantile uses Wichura's PPND16 rational approximation
//! (algorithm AS 241), good to about 1e-15 over the whole open interval. The
//! Student-t quantile inverts the regularized-incomplete-beta form of the t
//! CDF: bisection brackets the root, a few Newton steps on the survival
//! function polish it to machine accuracy. Correctness is preferred over
//! speed; nothing here is on a hot path.

use crate::{Error, Result};

const PI: f64 = std::f64::consts::PI;

/// Upper-tail standard normal quantile: the `rho` with `P(Z > rho) = alpha`.
pub fn normal_quantile_upper(alpha: f64) -> Result<f64> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::QuantileDomain(alpha));
    }
    // Phi^{-1}(1 - alpha) = -Phi^{-1}(alpha); feeding alpha itself keeps full
    // precision in the small-alpha tail where 1 - alpha would round.
    Ok(0.0 - ppnd16(alpha))
}

/// Wichura (1988), algorithm AS 241, routine PPND16: Phi^{-1}(p) for
/// 0 < p < 1 by rational approximation on three regions.
#[allow(clippy::excessive_precision)] // published coefficients, kept verbatim
fn ppnd16(p: f64) -> f64 {
    const A: [f64; 8] = [
        3.387_132_872_796_366_608e0,
        1.331_416_678_917_843_774_5e2,
        1.971_590_950_306_551_442_7e3,
        1.373_169_376_550_946_112_5e4,
        4.592_195_393_154_987_145_7e4,
        6.726_577_092_700_870_085_3e4,
        3.343_057_558_358_812_810_5e4,
        2.509_080_928_730_122_672_7e3,
    ];
    const B: [f64; 8] = [
        1.0,
        4.231_333_070_160_091_125_2e1,
        6.871_870_074_920_579_083e2,
        5.394_196_021_424_751_107_7e3,
        2.121_379_430_158_659_586_7e4,
        3.930_789_580_009_271_061e4,
        2.872_908_573_572_194_267_4e4,
        5.226_495_278_852_854_561e3,
    ];
    const C: [f64; 8] = [
        1.423_437_110_749_683_577_34e0,
        4.630_337_846_156_545_295_9e0,
        5.769_497_221_460_691_405_5e0,
        3.647_848_324_763_204_605_04e0,
        1.270_458_252_452_368_382_58e0,
        2.417_807_251_774_506_117_7e-1,
        2.272_384_498_926_918_458_33e-2,
        7.745_450_142_783_414_076_4e-4,
    ];
    const D: [f64; 8] = [
        1.0,
        2.053_191_626_637_758_821_87e0,
        1.676_384_830_183_803_849_4e0,
        6.897_673_349_851_000_045_5e-1,
        1.481_039_764_274_800_745_9e-1,
        1.519_866_656_361_645_719_66e-2,
        5.475_938_084_995_344_946e-4,
        1.050_750_071_644_416_843_24e-9,
    ];
    const E: [f64; 8] = [
        6.657_904_643_501_103_777_2e0,
        5.463_784_911_164_114_369_9e0,
        1.784_826_539_917_291_335_8e0,
        2.965_605_718_285_048_912_3e-1,
        2.653_218_952_657_612_309_3e-2,
        1.242_660_947_388_078_438_6e-3,
        2.711_555_568_743_487_578_15e-5,
        2.010_334_399_292_288_132_65e-7,
    ];
    const F: [f64; 8] = [
        1.0,
        5.998_322_065_558_879_376_9e-1,
        1.369_298_809_227_358_053_1e-1,
        1.487_536_129_085_061_485_25e-2,
        7.868_691_311_456_132_591e-4,
        1.846_318_317_510_054_681_8e-5,
        1.421_511_758_316_445_888_7e-7,
        2.044_263_103_389_939_785_64e-15,
    ];

    let q = p - 0.5;
    if q.abs() <= 0.425 {
        let r = 0.180_625 - q * q;
        return q * poly(&A, r) / poly(&B, r);
    }
    let r = if q < 0.0 { p } else { 1.0 - p };
    let r = (-r.ln()).sqrt();
    let x = if r <= 5.0 {
        let r = r - 1.6;
        poly(&C, r) / poly(&D, r)
    } else {
        let r = r - 5.0;
        poly(&E, r) / poly(&F, r)
    };
    if q < 0.0 {
        -x
    } else {
        x
    }
}

/// Horner evaluation; coefficients in ascending order of powers.
fn poly(coeffs: &[f64; 8], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}

fn check_df(df: f64) -> Result<()> {
    if !df.is_finite() || df <= 0.0 {
        return Err(Error::Param("degrees of freedom must be positive"));
    }
    Ok(())
}

/// CDF of Student's t with `df > 0` degrees of freedom, through
/// `P(T > t) = (1/2) I_x(df/2, 1/2)` with `x = df/(df + t^2)` for `t >= 0`.
pub fn student_t_cdf(t: f64, df: f64) -> Result<f64> {
    check_df(df)?;
    if t.is_nan() {
        return Err(Error::NonFinite);
    }
    if t == 0.0 {
        return Ok(0.5);
    }
    let half_tail = if t.is_infinite() {
        0.0
    } else {
        0.5 * beta_reg(0.5 * df, 0.5, df / (df + t * t))
    };
    Ok(if t > 0.0 { 1.0 - half_tail } else { half_tail })
}

fn t_pdf(t: f64, df: f64) -> f64 {
    let ln = ln_gamma(0.5 * (df + 1.0))
        - ln_gamma(0.5 * df)
        - 0.5 * (df * PI).ln()
        - 0.5 * (df + 1.0) * (t * t / df).ln_1p();
    ln.exp()
}

/// Upper-tail Student-t quantile: the `t` with `P(T > t) = alpha`.
pub fn student_t_quantile_upper(alpha: f64, df: f64) -> Result<f64> {
    check_df(df)?;
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::QuantileDomain(alpha));
    }
    if alpha == 0.5 {
        return Ok(0.0);
    }
    if alpha > 0.5 {
        return Ok(-student_t_quantile_upper(1.0 - alpha, df)?);
    }
    // Bracket: I_x(df/2, 1/2) = 2*alpha at x = df/(df + t^2); beta_reg is
    // increasing in x, so plain bisection converges unconditionally.
    let target = 2.0 * alpha;
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    for _ in 0..80 {
        let mid = 0.5 * (lo + hi);
        if beta_reg(0.5 * df, 0.5, mid) < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let x = 0.5 * (lo + hi);
    let mut t = (df * (1.0 - x) / x).sqrt();
    // Newton polish on g(t) = P(T > t) - alpha, g'(t) = -pdf(t).
    for _ in 0..4 {
        let sf = 0.5 * beta_reg(0.5 * df, 0.5, df / (df + t * t));
        let step = (sf - alpha) / t_pdf(t, df);
        t += step;
        if step.abs() <= 1e-15 * t.abs() {
            break;
        }
    }
    Ok(t)
}

/// Regularized incomplete beta `I_x(a, b)` by the standard continued fraction
/// with the symmetry switch at `x = (a+1)/(a+b+2)` (modified Lentz iteration).
pub(crate) fn beta_reg(a: f64, b: f64, x: f64) -> f64 {
    debug_assert!(a > 0.0 && b > 0.0 && (0.0..=1.0).contains(&x));
    if x <= 0.0 {
        return 0.0;
    }
    if x >= 1.0 {
        return 1.0;
    }
    let ln_front = ln_gamma(a + b) - ln_gamma(a) - ln_gamma(b) + a * x.ln() + b * (-x).ln_1p();
    let front = ln_front.exp();
    if x < (a + 1.0) / (a + b + 2.0) {
        front * beta_cf(a, b, x) / a
    } else {
        1.0 - front * beta_cf(b, a, 1.0 - x) / b
    }
}

fn beta_cf(a: f64, b: f64, x: f64) -> f64 {
    const TINY: f64 = 1e-300;
    const EPS: f64 = 3e-16;
    let qab = a + b;
    let qap = a + 1.0;
    let qam = a - 1.0;
    let mut c = 1.0;
    let mut d = 1.0 - qab * x / qap;
    if d.abs() < TINY {
        d = TINY;
    }
    d = 1.0 / d;
    let mut h = d;
    for m in 1..=300 {
        let mf = m as f64;
        let m2 = 2.0 * mf;

        let aa = mf * (b - mf) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if d.abs() < TINY {
            d = TINY;
        }
        c = 1.0 + aa / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        h *= d * c;

        let aa = -(a + mf) * (qab + mf) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if d.abs() < TINY {
            d = TINY;
        }
        c = 1.0 + aa / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        let del = d * c;
        h *= del;
        if (del - 1.0).abs() < EPS {
            break;
        }
    }
    h
}

/// ln Gamma(x) for x > 0, Lanczos approximation (g = 7, 9 terms).
#[allow(clippy::excessive_precision)] // published coefficients, kept verbatim
pub(crate) fn ln_gamma(x: f64) -> f64 {
    const COEFFS: [f64; 9] = [
        0.999_999_999_999_809_93,
        676.520_368_121_885_1,
        -1_259.139_216_722_402_8,
        771.323_428_777_653_13,
        -176.615_029_162_140_59,
        12.507_343_278_686_905,
        -0.138_571_095_265_720_12,
        9.984_369_578_019_571_6e-6,
        1.505_632_735_149_311_6e-7,
    ];
    debug_assert!(x > 0.0);
    if x < 0.5 {
        // reflection keeps the small-argument region accurate
        return (PI / (PI * x).sin()).ln() - ln_gamma(1.0 - x);
    }
    let x = x - 1.0;
    let mut acc = COEFFS[0];
    for (i, &c) in COEFFS.iter().enumerate().skip(1) {
        acc += c / (x + i as f64);
    }
    let t = x + 7.5;
    0.5 * (2.0 * PI).ln() + (x + 0.5) * t.ln() - t + acc.ln()
}
