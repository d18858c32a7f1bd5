//! Exact solutions for the velocity and the shear stress.
//!
//! Every evaluator first builds a [`ModalProfile`] for a fixed time: the
//! coefficients of the Bessel modes, after which the field at any radius is a
//! cheap weighted sum. The point functions are thin wrappers over that.

mod closed;
mod convolution;
mod field;
mod series;

pub use convolution::{mode_convolution, MAX_DOUBLINGS};
pub use field::{shear_field, velocity_field, FieldKind, FieldProfile};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::modal::{Evaluation, Method, ModalProfile, RadialShape};
use crate::params::{FlowConfig, FluidParams};
use crate::special::ModeBasis;
use series::ModeValue;

fn check_setup(fc: &FlowConfig, basis: &ModeBasis, t: f64) -> Result<()> {
    fc.validate()?;
    if basis.radius() != fc.radius {
        return Err(Error::invalid("basis", "mode basis was built for a different radius"));
    }
    if basis.len() < fc.n_modes {
        return Err(Error::invalid("basis", format!("basis holds {} modes, {} requested", basis.len(), fc.n_modes)));
    }
    if !(t >= 0.0 && t.is_finite()) {
        return Err(Error::invalid("t", format!("time must be nonnegative and finite, got {t}")));
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

fn from_modes<F>(rigid: f64, shape: RadialShape, fc: &FlowConfig, basis: &ModeBasis, mode: F) -> Result<ModalProfile>
where
    F: Fn(usize, f64, f64) -> Result<ModeValue> + Sync,
{
    let values = (0..fc.n_modes)
        .into_par_iter()
        .map(|n| mode(n, basis.zeros()[n], basis.weights()[n]))
        .collect::<Result<Vec<_>>>()?;
    let mut base = ModalProfile::new(rigid, values.iter().map(|v| v.value).collect(), shape);
    for v in &values {
        base.cancellation = base.cancellation.max(v.cancellation);
        if v.fallback {
            base.fallback_modes += 1;
        }
    }
    if base.fallback_modes > 0 {
        base.method = Method::OracleFallback;
    }
    Ok(base)
}

/// Mode coefficients of the Newtonian velocity at time t.
pub fn velocity_newtonian_modes(fp: &FluidParams, fc: &FlowConfig, basis: &ModeBasis, t: f64) -> Result<ModalProfile> {
    check_setup(fc, basis, t)?;
    Ok(closed::velocity_newtonian_profile(fp, fc, basis, t))
}

/// Mode coefficients of the ordinary second grade velocity (beta taken as 1).
pub fn velocity_sgf_modes(fp: &FluidParams, fc: &FlowConfig, basis: &ModeBasis, t: f64) -> Result<ModalProfile> {
    check_setup(fc, basis, t)?;
    Ok(closed::velocity_sgf_profile(fp, fc, basis, t))
}

/// Mode coefficients of the velocity of the generalized fluid.
///
/// Modes whose series is too cancellation-prone are inverted numerically;
/// the profile records how many.
pub fn velocity_modes(fp: &FluidParams, fc: &FlowConfig, basis: &ModeBasis, t: f64) -> Result<ModalProfile> {
    check_setup(fc, basis, t)?;
    if fp.alpha() == 0.0 {
        return Ok(closed::velocity_newtonian_profile(fp, fc, basis, t));
    }
    from_modes(fc.omega * t, RadialShape::J1, fc, basis, |n, r1n, w| series::velocity_mode(fp, fc, n, r1n, w, t))
}

/// Mode coefficients (of J2(r r_n)) of the Newtonian shear stress.
pub fn shear_newtonian_modes(fp: &FluidParams, fc: &FlowConfig, basis: &ModeBasis, t: f64) -> Result<ModalProfile> {
    check_setup(fc, basis, t)?;
    Ok(closed::shear_newtonian_profile(fp, fc, basis, t))
}

/// Mode coefficients of the ordinary second grade shear stress.
pub fn shear_sgf_modes(fp: &FluidParams, fc: &FlowConfig, basis: &ModeBasis, t: f64) -> Result<ModalProfile> {
    check_setup(fc, basis, t)?;
    Ok(closed::shear_sgf_profile(fp, fc, basis, t))
}

/// Mode coefficients of the shear stress of the generalized fluid. At
/// beta = 1 the closed second grade form is used.
pub fn shear_modes(fp: &FluidParams, fc: &FlowConfig, basis: &ModeBasis, t: f64) -> Result<ModalProfile> {
    check_setup(fc, basis, t)?;
    if fp.alpha() == 0.0 {
        return Ok(closed::shear_newtonian_profile(fp, fc, basis, t));
    }
    if fp.beta() == 1.0 {
        return Ok(closed::shear_sgf_profile(fp, fc, basis, t));
    }
    from_modes(0.0, RadialShape::J2, fc, basis, |n, r1n, w| series::shear_mode(fp, fc, n, r1n, w, t))
}

fn at_point<F>(fc: &FlowConfig, basis: &ModeBasis, r: f64, t: f64, modes: F) -> Result<Evaluation>
where
    F: FnOnce() -> Result<ModalProfile>,
{
    check_radius(fc, r).map_err(|e| e.at(r, t))?;
    let p = modes().map_err(|e| e.at(r, t))?;
    Ok(p.evaluation(basis, r))
}

/// Newtonian velocity
/// r Omega t - (2 Omega / nu) sum_n J1(r r_n) / (r_n^3 J2(R r_n)) (1 - exp(-nu r_n^2 t)).
pub fn velocity_newtonian(fp: &FluidParams, fc: &FlowConfig, basis: &ModeBasis, r: f64, t: f64) -> Result<Evaluation> {
    at_point(fc, basis, r, t, || velocity_newtonian_modes(fp, fc, basis, t))
}

/// Velocity of the generalized second grade fluid.
pub fn velocity(fp: &FluidParams, fc: &FlowConfig, basis: &ModeBasis, r: f64, t: f64) -> Result<Evaluation> {
    at_point(fc, basis, r, t, || velocity_modes(fp, fc, basis, t))
}

/// Velocity of the ordinary second grade fluid,
/// r Omega t - (2 Omega / nu) sum_n J1(r r_n) / (r_n^3 J2(R r_n)) (1 - exp(-nu r_n^2 t / (1 + alpha r_n^2))).
pub fn velocity_sgf(fp: &FluidParams, fc: &FlowConfig, basis: &ModeBasis, r: f64, t: f64) -> Result<Evaluation> {
    at_point(fc, basis, r, t, || velocity_sgf_modes(fp, fc, basis, t))
}

/// Newtonian shear stress
/// 2 rho Omega sum_n J2(r r_n) / (r_n^2 J2(R r_n)) (1 - exp(-nu r_n^2 t)).
pub fn shear_newtonian(fp: &FluidParams, fc: &FlowConfig, basis: &ModeBasis, r: f64, t: f64) -> Result<Evaluation> {
    at_point(fc, basis, r, t, || shear_newtonian_modes(fp, fc, basis, t))
}

/// Shear stress of the generalized second grade fluid.
pub fn shear(fp: &FluidParams, fc: &FlowConfig, basis: &ModeBasis, r: f64, t: f64) -> Result<Evaluation> {
    at_point(fc, basis, r, t, || shear_modes(fp, fc, basis, t))
}

/// Shear stress of the ordinary second grade fluid; nonzero at t = 0.
pub fn shear_sgf(fp: &FluidParams, fc: &FlowConfig, basis: &ModeBasis, r: f64, t: f64) -> Result<Evaluation> {
    at_point(fc, basis, r, t, || shear_sgf_modes(fp, fc, basis, t))
}
