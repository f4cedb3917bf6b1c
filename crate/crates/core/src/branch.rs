//! Branch-fixed complex logarithms and powers.
//!
//! Everything in this crate evaluates logarithms of real data on one fixed
//! branch: `log x = ln|x| + i*pi*[x < 0]`, so negative reals get imaginary
//! part exactly pi, never -pi. Powers of complex numbers measure the argument
//! in `[0, 2*pi)`; [`cpow`] additionally accepts a branch-leaf index `k`, which
//! adds `2*pi*k` to the argument before exponentiating. All estimators use the
//! `k = 0` leaf; other leaves exist so the leaf-dependence of fractional
//! powers can be tabulated and tested.

use num_complex::Complex64;

use crate::{Error, Result};

const PI: f64 = std::f64::consts::PI;

/// Logarithm of a nonzero real on the fixed branch: `ln|x| + i*pi*[x < 0]`.
///
/// The imaginary part is exactly `0.0` for positive `x` and exactly
/// `std::f64::consts::PI` for negative `x`.
pub fn branch_log(x: f64) -> Result<Complex64> {
    if !x.is_finite() {
        return Err(Error::NonFinite);
    }
    if x == 0.0 {
        return Err(Error::ZeroDatum);
    }
    let im = if x < 0.0 { PI } else { 0.0 };
    Ok(Complex64::new(x.abs().ln(), im))
}

/// Argument of `z` measured in `[0, 2*pi)` instead of the usual `(-pi, pi]`.
pub(crate) fn arg_in_0_2pi(z: Complex64) -> f64 {
    let a = z.im.atan2(z.re);
    if a < 0.0 {
        a + 2.0 * PI
    } else {
        a
    }
}

/// `z^p` on branch leaf `k`: `exp(p * (ln|z| + i*(arg z + 2*pi*k)))` with
/// `arg z` in `[0, 2*pi)`.
///
/// `cpow(z, 0.0, k)` is exactly `1 + 0i` for every nonzero finite `z`.
pub fn cpow(z: Complex64, p: f64, k: i32) -> Result<Complex64> {
    if !z.re.is_finite() || !z.im.is_finite() || !p.is_finite() {
        return Err(Error::NonFinite);
    }
    if z.re == 0.0 && z.im == 0.0 {
        return Err(Error::ZeroDatum);
    }
    let log = Complex64::new(z.norm().ln(), arg_in_0_2pi(z) + 2.0 * PI * f64::from(k));
    Ok((log * p).exp())
}
