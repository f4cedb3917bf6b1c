//! Closed-form moment identities against the quadrature referee, plus a
//! Monte Carlo cross-check of the quadrature itself. The closed forms and
//! the quadrature arrive at their numbers by unrelated routes, so agreement
//! at 1e-7 relative over the whole grid is meaningful.

use cauchydisc_core::moments::{
    expected_abs_pow, expected_pow, expected_pow_positive, log_moments, CauchyParams,
};
use cauchydisc_core::oracle::{cauchy_expect, cauchy_expect_with, mc_moment, Integrand};
use cauchydisc_core::Complex64;

const PI: f64 = std::f64::consts::PI;
const QUAD_TOL: f64 = 1e-10;

fn grid() -> Vec<CauchyParams> {
    [
        (0.0, 1.0),
        (1.0, 1.0),
        (5.0, 1.0),
        (-3.0, 2.0),
        (100.0, 1.0),
    ]
    .into_iter()
    .map(|(mu, sigma)| CauchyParams::new(mu, sigma).unwrap())
    .collect()
}

const POWERS: [f64; 6] = [-0.9, -0.5, -0.1, 0.1, 0.5, 0.9];

#[test]
fn signed_power_moments_match_quadrature() {
    for params in grid() {
        for p in POWERS {
            let analytic = expected_pow(&params, p).unwrap();
            let quad = cauchy_expect(&Integrand::Pow(p), &params, QUAD_TOL).unwrap();
            let rel = (analytic - quad.value).norm() / analytic.norm();
            assert!(
                rel <= 1e-7,
                "gamma = {:?}, p = {p}: rel err {rel:.3e} ({analytic} vs {})",
                params.gamma(),
                quad.value
            );
        }
    }
}

#[test]
fn positive_part_power_moments_match_quadrature() {
    for params in grid() {
        for p in POWERS {
            let analytic = expected_pow_positive(&params, p).unwrap();
            let quad = cauchy_expect(&Integrand::PowPositive(p), &params, QUAD_TOL).unwrap();
            let rel = (analytic - quad.value.re).abs() / analytic.abs();
            assert!(
                rel <= 1e-7,
                "gamma = {:?}, p = {p}: rel err {rel:.3e}",
                params.gamma()
            );
            assert!(quad.value.im.abs() <= 1e-12);
        }
    }
}

#[test]
fn absolute_power_moments_match_quadrature() {
    for params in grid() {
        for p in POWERS {
            let analytic = expected_abs_pow(&params, p).unwrap();
            let quad = cauchy_expect(&Integrand::AbsPow(p), &params, QUAD_TOL).unwrap();
            let rel = (analytic - quad.value.re).abs() / analytic.abs();
            assert!(
                rel <= 1e-7,
                "gamma = {:?}, p = {p}: rel err {rel:.3e}",
                params.gamma()
            );
        }
    }
}

#[test]
fn positive_mass_matches_quadrature() {
    for params in grid() {
        let analytic = expected_pow_positive(&params, 0.0).unwrap();
        let quad = cauchy_expect(&Integrand::IndicatorPositive, &params, QUAD_TOL).unwrap();
        assert!(
            (analytic - quad.value.re).abs() <= 1e-9,
            "gamma = {:?}",
            params.gamma()
        );
    }
}

#[test]
fn log_moments_match_quadrature() {
    for params in grid() {
        let lm = log_moments(&params);
        let theta = params.arg_gamma();
        let log_gamma = Complex64::new(params.abs_gamma().ln(), theta);

        let e_log = cauchy_expect(&Integrand::LogAbs, &params, QUAD_TOL).unwrap();
        assert!(
            (lm.e_log_abs - e_log.value.re).abs() <= 1e-8 * lm.e_log_abs.abs().max(1.0),
            "E[ln|X|] for gamma = {:?}",
            params.gamma()
        );

        let e_log_sq = cauchy_expect(&Integrand::LogAbsSq, &params, QUAD_TOL).unwrap();
        assert!(
            (lm.e_log_abs_sq - e_log_sq.value.re).abs() <= 1e-8 * lm.e_log_abs_sq.max(1.0),
            "E[(ln|X|)^2] for gamma = {:?}",
            params.gamma()
        );

        // Var(ln|X|) via E[(ln|X| - ln|gamma|)^2], centered inside the
        // integrand so no large-term cancellation pollutes the comparison
        let var_abs = cauchy_expect_with(
            |x| {
                let d = x.abs().ln() - log_gamma.re;
                Complex64::new(d * d, 0.0)
            },
            &params,
            QUAD_TOL,
        )
        .unwrap();
        assert!(
            (lm.var_log_abs - var_abs.value.re).abs() <= 1e-8 * lm.var_log_abs.max(1e-2),
            "Var(ln|X|) for gamma = {:?}: {} vs {}",
            params.gamma(),
            lm.var_log_abs,
            var_abs.value.re
        );

        // E|log X - log gamma|^2, the full complex log variance
        let var_full = cauchy_expect_with(
            |x| {
                let l = Complex64::new(x.abs().ln(), if x < 0.0 { PI } else { 0.0 }) - log_gamma;
                Complex64::new(l.norm_sqr(), 0.0)
            },
            &params,
            QUAD_TOL,
        )
        .unwrap();
        assert!(
            (lm.var_log - var_full.value.re).abs() <= 1e-8 * lm.var_log.max(1e-2),
            "Var(log X) for gamma = {:?}: {} vs {}",
            params.gamma(),
            lm.var_log,
            var_full.value.re
        );
    }
}

#[test]
fn log_is_proper_over_grid() {
    // E[(log X - log gamma)^2] = 0: real and imaginary fluctuations of the
    // branch log have equal variance and no covariance
    for params in grid() {
        let quad = cauchy_expect(&Integrand::LogComplexSq, &params, QUAD_TOL).unwrap();
        assert!(
            quad.value.norm() <= 1e-8,
            "pseudo-variance {} for gamma = {:?}",
            quad.value,
            params.gamma()
        );
    }
}

#[test]
fn complex_log_expectation_is_branch_log_of_gamma() {
    for params in grid() {
        let log_gamma = Complex64::new(params.abs_gamma().ln(), params.arg_gamma());
        let quad = cauchy_expect_with(
            |x| Complex64::new(x.abs().ln(), if x < 0.0 { PI } else { 0.0 }),
            &params,
            QUAD_TOL,
        )
        .unwrap();
        assert!(
            (quad.value - log_gamma).norm() <= 1e-8,
            "E[log X] = {} vs log gamma = {log_gamma}",
            quad.value
        );
    }
}

#[test]
fn quadrature_agrees_with_monte_carlo() {
    // independent referee for the referee: brute-force draws, powers kept
    // inside |p| < 1/2 so the integrand has finite variance and the standard
    // error means what it says
    let draws = 400_000;
    let mut checked = 0;
    for params in [
        CauchyParams::new(0.0, 1.0).unwrap(),
        CauchyParams::new(5.0, 1.0).unwrap(),
        CauchyParams::new(-3.0, 2.0).unwrap(),
    ] {
        for spec in [
            Integrand::Pow(0.3),
            Integrand::Pow(-0.3),
            Integrand::AbsPow(0.45),
            Integrand::AbsPow(-0.45),
            Integrand::PowPositive(0.1),
            Integrand::LogAbs,
            Integrand::LogAbsSq,
            Integrand::IndicatorPositive,
        ] {
            let quad = cauchy_expect(&spec, &params, QUAD_TOL).unwrap();
            let mc = mc_moment(&spec, &params, draws, 0xFEED + checked).unwrap();
            let err_re = (quad.value.re - mc.mean.re).abs();
            let err_im = (quad.value.im - mc.mean.im).abs();
            assert!(
                err_re <= 4.0 * mc.se_re.max(1e-9) && err_im <= 4.0 * mc.se_im.max(1e-9),
                "{spec:?} at gamma = {:?}: quad {} vs mc {} (se {}, {})",
                params.gamma(),
                quad.value,
                mc.mean,
                mc.se_re,
                mc.se_im
            );
            checked += 1;
        }
    }
    assert_eq!(checked, 24);
}
