//! Mode-wise series for the non-Newtonian corrections.
//!
//! Each correction is an alternating sum over k of convolutions of
//! exp(-nu r_n^2 t) with G-functions in s. The sum is exact but its terms grow
//! like (nu r_n^2 t)^k / k! before decaying, so a mode whose cancellation
//! indicator passes `FlowConfig::cancellation_limit` is handed to the Laplace
//! oracle instead.

use super::closed::{shear_newtonian_coeff, velocity_newtonian_coeff};
use super::convolution::{convolve, convolve_with};
use crate::error::{Error, Result};
use crate::oracle;
use crate::params::{FlowConfig, FluidParams};
use crate::special::{GSeries, KahanSum};

/// Full coefficient of one mode with its error amplification.
#[derive(Debug, Clone, Copy)]
pub(crate) struct ModeValue {
    pub value: f64,
    pub cancellation: f64,
    pub fallback: bool,
}

fn describe(first: Result<(f64, f64)>) -> String {
    match first {
        Ok((_, ind)) => format!("cancellation indicator {ind:e}"),
        Err(e) => e.to_string(),
    }
}

/// Summed magnitudes above this many e-folds of the limit are not attempted.
const PRECHECK_MARGIN: f64 = 10.0;

/// Rough log of the largest term relative to the sum: the k-terms grow like
/// exp(c t) and the inner G-series like exp((x t^a)^(1/a)).
fn growth_estimate(c: f64, x: f64, a: f64, t: f64) -> f64 {
    if a == 0.0 {
        c * t / (1.0 + x)
    } else {
        c * t + ((x * t.powf(a)).ln() / a).exp()
    }
}

fn k_series<F>(c: f64, fc: &FlowConfig, mut term: F) -> Result<(f64, f64)>
where
    F: FnMut(usize) -> Result<(f64, f64)>,
{
    let ln_c = c.ln();
    let mut sum = KahanSum::new();
    let mut weight = 0.0;
    let mut recent = [f64::INFINITY; 3];
    for k in 0..=fc.k_max {
        let (inner, inner_mag) = term(k)?;
        let scale = (k as f64 * ln_c).exp();
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let value = sign * scale * inner;
        if !value.is_finite() {
            return Err(Error::Cancellation { indicator: f64::INFINITY });
        }
        sum.add(value);
        weight += scale * inner_mag;
        recent = [recent[1], recent[2], value.abs()];
        let s = sum.value().abs();
        let small = recent.iter().all(|m| *m <= fc.series_tol * s);
        if k >= 2 && small && recent[2] <= recent[1] && recent[1] <= recent[0] {
            let indicator = if s == 0.0 { if weight == 0.0 { 1.0 } else { f64::INFINITY } } else { (weight / s).max(1.0) };
            return Ok((sum.value(), indicator));
        }
    }
    Err(Error::NonConvergence { terms: fc.k_max + 1 })
}

fn g_series(a: f64, b: f64, k: usize, x: f64, t: f64, fc: &FlowConfig) -> Result<GSeries> {
    let g = GSeries::new(a, b, k as f64 + 1.0, -x, t, fc.series_tol, fc.j_max)?;
    if g.cancellation() > fc.cancellation_limit {
        return Err(Error::Cancellation { indicator: g.cancellation() });
    }
    Ok(g)
}

/// sum_k (-c)^k int_0^t exp(-c (t - s)) G_{1-beta, -beta k - 1, k + 1}(-x, s) ds
pub(crate) fn velocity_kernel_series(x: f64, c: f64, beta: f64, t: f64, fc: &FlowConfig) -> Result<(f64, f64)> {
    let a = 1.0 - beta;
    if growth_estimate(c, x, a, t) > fc.cancellation_limit.ln() + PRECHECK_MARGIN {
        return Err(Error::Cancellation { indicator: f64::INFINITY });
    }
    k_series(c, fc, |k| {
        let g = g_series(a, -beta * k as f64 - 1.0, k, x, t, fc)?;
        let i = convolve(c, &g, t, fc.quad_tol)?;
        Ok((i, i.abs() * g.cancellation()))
    })
}

/// Velocity coefficient of one mode (J1(r r_n) factor removed): the
/// Newtonian part plus the series correction, or the inverted mode transform
/// when the series is unusable.
pub(crate) fn velocity_mode(fp: &FluidParams, fc: &FlowConfig, mode: usize, r1n: f64, j2_wall: f64, t: f64) -> Result<ModeValue> {
    let newtonian = velocity_newtonian_coeff(fp, fc, r1n, j2_wall, t);
    if t == 0.0 || fp.alpha() == 0.0 {
        return Ok(ModeValue { value: newtonian, cancellation: 1.0, fallback: false });
    }
    let r2 = r1n * r1n;
    let (c, x) = (fp.nu() * r2, fp.alpha() * r2);
    let amp = 2.0 * fp.alpha() * fc.omega * r1n / j2_wall;
    match velocity_kernel_series(x, c, fp.beta(), t, fc) {
        Ok((v, ind)) if ind <= fc.cancellation_limit => Ok(ModeValue { value: newtonian + amp * v, cancellation: ind, fallback: false }),
        first => {
            let value = oracle::velocity_mode_by_inversion(fp, fc, r1n, j2_wall, t).map_err(|e| Error::ParameterRegime {
                mode,
                t,
                reason: format!("series: {}; oracle: {e}", describe(first)),
            })?;
            Ok(ModeValue { value, cancellation: 1.0, fallback: true })
        }
    }
}

/// Stress correction of one mode before division by J2(R r_n):
/// 2 alpha1 Omega G_{1,beta-1,1}(-c, t)
///   - 2 alpha Omega r_n^2 sum_k (-c)^k [mu I1_k - c alpha1 I2_k + alpha1 G2_k(t)].
fn shear_correction_series(fp: &FluidParams, fc: &FlowConfig, r1n: f64, t: f64) -> Result<(f64, f64)> {
    let beta = fp.beta();
    let a = 1.0 - beta;
    let r2 = r1n * r1n;
    let (c, x) = (fp.nu() * r2, fp.alpha() * r2);
    if growth_estimate(c, x, a, t) > fc.cancellation_limit.ln() + PRECHECK_MARGIN {
        return Err(Error::Cancellation { indicator: f64::INFINITY });
    }
    let (mu, alpha1) = (fp.mu(), fp.alpha1());
    let head_series = GSeries::new(1.0, beta - 1.0, 1.0, -c, t, fc.series_tol, fc.j_max)?;
    let head = 2.0 * alpha1 * fc.omega * head_series.value_at_max();
    let head_mag = head.abs() * head_series.cancellation();

    let (tail, tail_ind) = k_series(c, fc, |k| {
        let g1 = g_series(a, -beta * k as f64 - 1.0, k, x, t, fc)?;
        let g2 = g_series(a, beta - beta * k as f64 - 2.0, k, x, t, fc)?;
        let i1 = convolve(c, &g1, t, fc.quad_tol)?;
        let i2 = convolve_with(c, |s| g2.eval(s), t, fc.quad_tol)?;
        let g2t = g2.value_at_max();
        let value = mu * i1 - c * alpha1 * i2 + alpha1 * g2t;
        let mag = mu * i1.abs() * g1.cancellation() + (c * alpha1 * i2.abs() + alpha1 * g2t.abs()) * g2.cancellation();
        Ok((value, mag))
    })?;
    let scale = 2.0 * fp.alpha() * fc.omega * r2;
    let total = head - scale * tail;
    let weight = head_mag + scale * tail.abs() * tail_ind;
    let indicator = if total == 0.0 { f64::INFINITY } else { (weight / total.abs()).max(1.0) };
    Ok((total, indicator))
}

/// Stress coefficient of one mode (J2(r r_n) factor removed), built like
/// [`velocity_mode`].
pub(crate) fn shear_mode(fp: &FluidParams, fc: &FlowConfig, mode: usize, r1n: f64, j2_wall: f64, t: f64) -> Result<ModeValue> {
    let newtonian = shear_newtonian_coeff(fp, fc, r1n, j2_wall, t);
    if t == 0.0 || fp.alpha() == 0.0 {
        return Ok(ModeValue { value: newtonian, cancellation: 1.0, fallback: false });
    }
    match shear_correction_series(fp, fc, r1n, t) {
        Ok((v, ind)) if ind <= fc.cancellation_limit => Ok(ModeValue { value: newtonian + v / j2_wall, cancellation: ind, fallback: false }),
        first => {
            let value = oracle::shear_mode_by_inversion(fp, fc, r1n, j2_wall, t).map_err(|e| Error::ParameterRegime {
                mode,
                t,
                reason: format!("series: {}; oracle: {e}", describe(first)),
            })?;
            Ok(ModeValue { value, cancellation: 1.0, fallback: true })
        }
    }
}
