//! Convolution of a decaying exponential with a G-function,
//! `int_0^t exp(-c (t - s)) G(s) ds`.

use crate::error::{Error, Result};
use crate::quadrature::integrate_graded;
use crate::special::{GFunctionParams, GSeries, MAX_TERMS};

/// Maximum number of panel doublings before the quadrature gives up.
pub const MAX_DOUBLINGS: usize = 12;

/// `int_0^t exp(-decay (t - s)) G_{a,b,c}(d, s) ds` with t = `g.t`.
///
/// The G-function series is built once on [0, t]; the integral uses composite
/// Gauss–Legendre panels graded toward s = 0 (where G carries a fractional
/// power of s), doubled until successive estimates agree to `quad_tol`.
pub fn mode_convolution(decay: f64, g: &GFunctionParams, quad_tol: f64) -> Result<f64> {
    if !(quad_tol > 0.0 && quad_tol <= 1e-2) {
        return Err(Error::invalid("quad_tol", format!("must lie in (0, 1e-2], got {quad_tol}")));
    }
    if !(decay >= 0.0 && decay.is_finite()) {
        return Err(Error::invalid("decay", format!("decay rate must be nonnegative, got {decay}")));
    }
    if !(g.t >= 0.0 && g.t.is_finite()) {
        return Err(Error::invalid("t", format!("time must be nonnegative, got {}", g.t)));
    }
    if g.leading_exponent() < 0.0 {
        return Err(Error::invalid(
            "b",
            format!("G-function integrand is unbounded at s = 0 (leading power {})", g.leading_exponent()),
        ));
    }
    if !(g.c > 0.0) || !(g.a * g.c - g.b > 0.0) {
        return Err(Error::ConvergenceCondition { a: g.a, b: g.b, c: g.c });
    }
    if g.t == 0.0 {
        return Ok(0.0);
    }
    let series = GSeries::new(g.a, g.b, g.c, g.d, g.t, (quad_tol * 1e-3).max(1e-16), MAX_TERMS)?;
    convolve(decay, &series, g.t, quad_tol)
}

pub(crate) fn convolve(decay: f64, series: &GSeries, t: f64, quad_tol: f64) -> Result<f64> {
    convolve_with(decay, |s| series.eval(s), t, quad_tol)
}

/// `int_0^t exp(-decay (t - s)) g(s) ds`. For fast decay the kernel has a
/// boundary layer of width 1/decay at s = t, so the upper half is graded
/// toward t as well.
pub(crate) fn convolve_with<G: Fn(f64) -> f64>(decay: f64, g: G, t: f64, quad_tol: f64) -> Result<f64> {
    if t == 0.0 {
        return Ok(0.0);
    }
    if decay * t <= 1.0 {
        return integrate_graded(|s| (-decay * (t - s)).exp() * g(s), t, quad_tol, MAX_DOUBLINGS);
    }
    let m = 0.5 * t;
    let lower = integrate_graded(|s| (-decay * (t - s)).exp() * g(s), m, quad_tol, MAX_DOUBLINGS)?;
    let upper = integrate_graded(|u| (-decay * u).exp() * g(t - u), t - m, quad_tol, MAX_DOUBLINGS)?;
    Ok(lower + upper)
}
