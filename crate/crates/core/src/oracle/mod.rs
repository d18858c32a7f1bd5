//! Laplace-domain solutions and their numerical inversion.
//!
//! The exact transforms of the velocity and stress are real and smooth on
//! q > 0, so they are inverted mode by mode with the Gaver–Stehfest
//! algorithm. The result is an oracle for the time-domain series that shares
//! nothing with them beyond the Bessel mode basis.

mod stehfest;

pub use stehfest::{stehfest_invert, stehfest_weights};

use crate::error::{Error, Result};
use crate::modal::{Evaluation, Method, ModalProfile, RadialShape};
use crate::params::{FlowConfig, FluidParams};
use crate::special::{j2, ln_binomial_weight, KahanSum, ModeBasis};

/// A sample of a transform at a real Laplace variable q > 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransformPoint {
    pub q: f64,
    pub value: f64,
}

impl TransformPoint {
    pub fn new(q: f64, value: f64) -> Result<Self> {
        if !(q > 0.0) {
            return Err(Error::invalid("q", format!("Laplace variable must be positive, got {q}")));
        }
        Ok(TransformPoint { q, value })
    }
}

#[inline]
fn qpow(q: f64, p: f64) -> f64 {
    (p * q.ln()).exp()
}

/// q^(beta-1) / (q + x q^beta + c): the fractional factor shared by the
/// non-Newtonian parts, with x = alpha r_n^2 and c = nu r_n^2.
pub fn fractional_factor(x: f64, c: f64, beta: f64, q: f64) -> f64 {
    let qb = qpow(q, beta);
    qb / q / (q + x * qb + c)
}

/// Partial sum over k < `terms` of the expansion
/// sum_k (-c)^k q^(-beta k - 1) / (q^(1-beta) + x)^(k+1) of
/// [`fractional_factor`]; it converges when c < q + x q^beta.
pub fn fractional_factor_expansion(x: f64, c: f64, beta: f64, q: f64, terms: usize) -> f64 {
    let base = qpow(q, 1.0 - beta) + x;
    let ratio = -c / (qpow(q, beta) * base);
    let mut term = 1.0 / (q * base);
    let mut acc = KahanSum::new();
    for _ in 0..terms {
        acc.add(term);
        term *= ratio;
    }
    acc.value()
}

fn check_q(q: f64) -> Result<()> {
    if q > 0.0 && q.is_finite() {
        Ok(())
    } else {
        Err(Error::invalid("q", format!("Laplace variable must be positive and finite, got {q}")))
    }
}

fn check_basis(fc: &FlowConfig, basis: &ModeBasis) -> Result<()> {
    if basis.radius() != fc.radius {
        return Err(Error::invalid("basis", "mode basis was built for a different radius"));
    }
    if basis.len() < fc.n_modes {
        return Err(Error::invalid("basis", format!("basis holds {} modes, {} requested", basis.len(), fc.n_modes)));
    }
    Ok(())
}

fn check_radius(fc: &FlowConfig, r: f64) -> Result<()> {
    if r >= 0.0 && r <= fc.radius {
        Ok(())
    } else {
        Err(Error::invalid("r", format!("radius {r} outside [0, {}]", fc.radius)))
    }
}

/// Hankel transform of the velocity image for one mode:
/// Omega R^2 r_n J2(R r_n) (nu + alpha q^beta) / (q^2 [q + alpha r_n^2 q^beta + nu r_n^2]).
pub fn velocity_transform_mode(fp: &FluidParams, fc: &FlowConfig, r1n: f64, q: f64) -> f64 {
    let qb = qpow(q, fp.beta());
    let r2 = r1n * r1n;
    fc.omega * fc.radius * fc.radius * r1n * j2(fc.radius * r1n) * (fp.nu() + fp.alpha() * qb)
        / (q * q * (q + fp.alpha() * r2 * qb + fp.nu() * r2))
}

/// The same mode transform split into its rigid, Newtonian and fractional
/// parts, whose sum equals [`velocity_transform_mode`].
pub fn velocity_transform_mode_split(fp: &FluidParams, fc: &FlowConfig, r1n: f64, q: f64) -> [f64; 3] {
    let r2 = r1n * r1n;
    let c = fp.nu() * r2;
    let amp = fc.omega * fc.radius * fc.radius * j2(fc.radius * r1n);
    let rigid = amp / (q * q * r1n);
    let newtonian = -amp / (fp.nu() * r2 * r1n) * (1.0 / q - 1.0 / (q + c));
    let fractional = fp.alpha() * amp * r1n / (q + c) * fractional_factor(fp.alpha() * r2, c, fp.beta(), q);
    [rigid, newtonian, fractional]
}

/// Velocity image of one mode with its J1(r r_n) factor removed.
fn velocity_mode_image(fp: &FluidParams, fc: &FlowConfig, r1n: f64, j2_wall: f64, q: f64) -> f64 {
    let r2 = r1n * r1n;
    let c = fp.nu() * r2;
    let newtonian = -2.0 * fc.omega / (fp.nu() * r2 * r1n * j2_wall) * c / (q * (q + c));
    if fp.alpha() == 0.0 {
        return newtonian;
    }
    let fractional = 2.0 * fp.alpha() * fc.omega * r1n / j2_wall / (q + c) * fractional_factor(fp.alpha() * r2, c, fp.beta(), q);
    newtonian + fractional
}

/// Stress image (mu + alpha1 q^beta)(d/dr - 1/r) of one velocity mode,
/// with its J2(r r_n) factor removed.
fn shear_mode_image(fp: &FluidParams, fc: &FlowConfig, r1n: f64, j2_wall: f64, q: f64) -> f64 {
    let r2 = r1n * r1n;
    let c = fp.nu() * r2;
    let qb = qpow(q, fp.beta());
    let derivative = 2.0 * fc.omega / (fp.nu() * r2 * j2_wall) * c / (q * (q + c))
        - 2.0 * fp.alpha() * fc.omega * r2 / j2_wall / (q + c) * fractional_factor(fp.alpha() * r2, c, fp.beta(), q);
    (fp.mu() + fp.alpha1() * qb) * derivative
}

/// Laplace transform of the velocity, summed over `fc.n_modes` modes.
pub fn velocity_transform(fp: &FluidParams, fc: &FlowConfig, basis: &ModeBasis, r: f64, q: f64) -> Result<f64> {
    check_q(q)?;
    check_radius(fc, r)?;
    check_basis(fc, basis)?;
    let mut acc = KahanSum::new();
    acc.add(fc.omega * r / (q * q));
    for n in 0..fc.n_modes {
        let radial = basis.j1_at(r, n);
        if radial != 0.0 {
            acc.add(radial * velocity_mode_image(fp, fc, basis.zeros()[n], basis.weights()[n], q));
        }
    }
    Ok(acc.value())
}

/// Velocity transform rebuilt from the mode transforms by the inverse finite
/// Hankel transform with weights 2 J1(r r_n) / (R^2 J2(R r_n)^2). The rigid
/// part, whose Hankel series converges slowly, is inverted in closed form.
pub fn velocity_transform_resummed(fp: &FluidParams, fc: &FlowConfig, basis: &ModeBasis, r: f64, q: f64) -> Result<f64> {
    check_q(q)?;
    check_radius(fc, r)?;
    check_basis(fc, basis)?;
    let mut acc = KahanSum::new();
    acc.add(fc.omega * r / (q * q));
    for n in 0..fc.n_modes {
        let r1n = basis.zeros()[n];
        let j2w = j2(fc.radius * r1n);
        let rigid_part = fc.omega * fc.radius * fc.radius * j2w / (q * q * r1n);
        let image = velocity_transform_mode(fp, fc, r1n, q) - rigid_part;
        acc.add(2.0 / (fc.radius * fc.radius) * basis.j1_at(r, n) / (j2w * j2w) * image);
    }
    Ok(acc.value())
}

/// Laplace transform of the shear stress, assembled from the closed-form
/// mode derivative (d/dr - 1/r) J1(r r_n) = -r_n J2(r r_n).
pub fn shear_transform(fp: &FluidParams, fc: &FlowConfig, basis: &ModeBasis, r: f64, q: f64) -> Result<f64> {
    check_q(q)?;
    check_radius(fc, r)?;
    if r == 0.0 {
        return Err(Error::invalid("r", "the stress transform needs r > 0"));
    }
    check_basis(fc, basis)?;
    let mut acc = KahanSum::new();
    for n in 0..fc.n_modes {
        acc.add(basis.j2_at(r, n) * shear_mode_image(fp, fc, basis.zeros()[n], basis.weights()[n], q));
    }
    Ok(acc.value())
}

/// Shear stress transform assembled from the fully expanded double power
/// series in q (powers of -nu r_n^2 and -alpha r_n^2), summed along
/// anti-diagonals k + j = const with binomial weights in log space.
///
/// Only valid where the double series converges, i.e. where
/// nu r_n^2 / q + alpha r_n^2 / q^(1-beta) < 1 for every mode.
pub fn shear_transform_expanded(fp: &FluidParams, fc: &FlowConfig, basis: &ModeBasis, r: f64, q: f64) -> Result<f64> {
    check_q(q)?;
    check_radius(fc, r)?;
    check_basis(fc, basis)?;
    let beta = fp.beta();
    let (mu, alpha1) = (fp.mu(), fp.alpha1());
    let ln_q = q.ln();
    let mut total = KahanSum::new();
    for n in 0..fc.n_modes {
        let r1n = basis.zeros()[n];
        let r2 = r1n * r1n;
        let c = fp.nu() * r2;
        let x = fp.alpha() * r2;
        if c / q + x * qpow(q, beta - 1.0) >= 1.0 {
            return Err(Error::invalid("q", format!("expansion does not converge for mode {} at q = {q}", n + 1)));
        }
        let j2_wall = basis.weights()[n];
        let radial = basis.j2_at(r, n) / j2_wall;
        let mut mode = KahanSum::new();
        mode.add(2.0 * fp.rho() * fc.omega / r2 * c / (q * (q + c)));
        mode.add(2.0 * alpha1 * fc.omega * qpow(q, beta - 1.0) / (q + c));
        if fp.alpha() != 0.0 {
            let mut double = KahanSum::new();
            let mut small_run = 0;
            let mut prev = f64::INFINITY;
            for diag in 0..=(fc.k_max + fc.j_max) {
                let mut line = KahanSum::new();
                let mut line_mag = 0.0_f64;
                for k in diag.saturating_sub(fc.j_max)..=diag.min(fc.k_max) {
                    let j = diag - k;
                    let kf = k as f64;
                    let jf = j as f64;
                    let ln_w = ln_binomial_weight(kf + 1.0, j) + kf * c.ln() + jf * x.ln();
                    let sign = if diag % 2 == 0 { 1.0 } else { -1.0 };
                    let p1 = kf + (1.0 - beta) * (jf + 1.0) + 1.0;
                    let p2 = kf + 3.0 + (1.0 - beta) * jf - 2.0 * beta;
                    let inner = (mu * (-p1 * ln_q + ln_w).exp() - c * alpha1 * (-p2 * ln_q + ln_w).exp()) / (q + c)
                        + alpha1 * (-p2 * ln_q + ln_w).exp();
                    line.add(sign * inner);
                    line_mag = line_mag.max(inner.abs());
                }
                double.add(line.value());
                let s = double.value().abs();
                if line_mag <= fc.series_tol * s && line_mag <= prev {
                    small_run += 1;
                    if small_run >= 3 {
                        break;
                    }
                } else {
                    small_run = 0;
                }
                prev = line_mag;
            }
            mode.add(-2.0 * fp.alpha() * fc.omega * r2 * double.value());
        }
        total.add(radial * mode.value());
    }
    Ok(total.value())
}

/// L^{-1}{ q^(beta-1) / ((q + c)(q + x q^beta + c)) }(t): the time kernel of
/// the non-Newtonian velocity correction of one mode.
pub fn velocity_correction_kernel(x: f64, c: f64, beta: f64, t: f64, n: usize) -> Result<f64> {
    stehfest_invert(|q| fractional_factor(x, c, beta, q) / (q + c), t, n)
}

/// Velocity coefficient of one mode (J1(r r_n) factor removed) at time t by
/// inversion of that mode's transform.
pub fn velocity_mode_by_inversion(fp: &FluidParams, fc: &FlowConfig, r1n: f64, j2_wall: f64, t: f64) -> Result<f64> {
    stehfest_invert(|q| velocity_mode_image(fp, fc, r1n, j2_wall, q), t, fc.stehfest_n)
}

/// Stress coefficient of one mode (J2(r r_n) factor removed) at time t by
/// inversion of that mode's transform.
pub fn shear_mode_by_inversion(fp: &FluidParams, fc: &FlowConfig, r1n: f64, j2_wall: f64, t: f64) -> Result<f64> {
    stehfest_invert(|q| shear_mode_image(fp, fc, r1n, j2_wall, q), t, fc.stehfest_n)
}

/// Mode coefficients of the velocity at time t, each obtained by inverting
/// that mode's transform.
pub fn velocity_modes_via_inversion(fp: &FluidParams, fc: &FlowConfig, basis: &ModeBasis, t: f64) -> Result<ModalProfile> {
    check_basis(fc, basis)?;
    let rigid = stehfest_invert(|q| fc.omega / (q * q), t, fc.stehfest_n)?;
    let coeffs = (0..fc.n_modes)
        .map(|m| velocity_mode_by_inversion(fp, fc, basis.zeros()[m], basis.weights()[m], t))
        .collect::<Result<Vec<_>>>()?;
    let mut p = ModalProfile::new(rigid, coeffs, RadialShape::J1);
    p.method = Method::OracleFallback;
    p.fallback_modes = fc.n_modes;
    Ok(p)
}

/// Mode coefficients of the shear stress at time t by inversion.
pub fn shear_modes_via_inversion(fp: &FluidParams, fc: &FlowConfig, basis: &ModeBasis, t: f64) -> Result<ModalProfile> {
    check_basis(fc, basis)?;
    let coeffs = (0..fc.n_modes)
        .map(|m| shear_mode_by_inversion(fp, fc, basis.zeros()[m], basis.weights()[m], t))
        .collect::<Result<Vec<_>>>()?;
    let mut p = ModalProfile::new(0.0, coeffs, RadialShape::J2);
    p.method = Method::OracleFallback;
    p.fallback_modes = fc.n_modes;
    Ok(p)
}

/// Velocity at (r, t) by mode-wise Gaver–Stehfest inversion.
pub fn velocity_via_inversion(fp: &FluidParams, fc: &FlowConfig, basis: &ModeBasis, r: f64, t: f64) -> Result<Evaluation> {
    check_radius(fc, r)?;
    let p = velocity_modes_via_inversion(fp, fc, basis, t).map_err(|e| e.at(r, t))?;
    Ok(p.evaluation(basis, r))
}

/// Shear stress at (r, t) by mode-wise Gaver–Stehfest inversion.
pub fn shear_via_inversion(fp: &FluidParams, fc: &FlowConfig, basis: &ModeBasis, r: f64, t: f64) -> Result<Evaluation> {
    check_radius(fc, r)?;
    let p = shear_modes_via_inversion(fp, fc, basis, t).map_err(|e| e.at(r, t))?;
    Ok(p.evaluation(basis, r))
}
