//! Newtonian and ordinary second grade (beta = 1) solutions in closed form.

use crate::modal::{ModalProfile, RadialShape};
use crate::params::{FlowConfig, FluidParams};
use crate::special::ModeBasis;

/// 1 - exp(-z) without loss of digits for small z.
#[inline]
pub(crate) fn one_minus_exp(z: f64) -> f64 {
    -(-z).exp_m1()
}

pub(crate) fn velocity_newtonian_coeff(fp: &FluidParams, fc: &FlowConfig, r1n: f64, j2_wall: f64, t: f64) -> f64 {
    let r2 = r1n * r1n;
    -2.0 * fc.omega / fp.nu() / (r2 * r1n * j2_wall) * one_minus_exp(fp.nu() * r2 * t)
}

pub(crate) fn shear_newtonian_coeff(fp: &FluidParams, fc: &FlowConfig, r1n: f64, j2_wall: f64, t: f64) -> f64 {
    let r2 = r1n * r1n;
    2.0 * fp.rho() * fc.omega / (r2 * j2_wall) * one_minus_exp(fp.nu() * r2 * t)
}

pub(crate) fn velocity_sgf_coeff(fp: &FluidParams, fc: &FlowConfig, r1n: f64, j2_wall: f64, t: f64) -> f64 {
    let r2 = r1n * r1n;
    let damp = 1.0 + fp.alpha() * r2;
    -2.0 * fc.omega / fp.nu() / (r2 * r1n * j2_wall) * one_minus_exp(fp.nu() * r2 * t / damp)
}

pub(crate) fn shear_sgf_coeff(fp: &FluidParams, fc: &FlowConfig, r1n: f64, j2_wall: f64, t: f64) -> f64 {
    let r2 = r1n * r1n;
    let damp = 1.0 + fp.alpha() * r2;
    let bracket = 1.0 - (-fp.nu() * r2 * t / damp).exp() / damp;
    2.0 * fp.rho() * fc.omega / (r2 * j2_wall) * bracket
}

fn build(
    fc: &FlowConfig,
    basis: &ModeBasis,
    rigid: f64,
    shape: RadialShape,
    coeff: impl Fn(f64, f64) -> f64,
) -> ModalProfile {
    let coeffs = basis.zeros()[..fc.n_modes]
        .iter()
        .zip(&basis.weights()[..fc.n_modes])
        .map(|(&r1n, &w)| coeff(r1n, w))
        .collect();
    ModalProfile::new(rigid, coeffs, shape)
}

pub(crate) fn velocity_newtonian_profile(fp: &FluidParams, fc: &FlowConfig, basis: &ModeBasis, t: f64) -> ModalProfile {
    build(fc, basis, fc.omega * t, RadialShape::J1, |r1n, w| velocity_newtonian_coeff(fp, fc, r1n, w, t))
}

pub(crate) fn velocity_sgf_profile(fp: &FluidParams, fc: &FlowConfig, basis: &ModeBasis, t: f64) -> ModalProfile {
    build(fc, basis, fc.omega * t, RadialShape::J1, |r1n, w| velocity_sgf_coeff(fp, fc, r1n, w, t))
}

pub(crate) fn shear_newtonian_profile(fp: &FluidParams, fc: &FlowConfig, basis: &ModeBasis, t: f64) -> ModalProfile {
    build(fc, basis, 0.0, RadialShape::J2, |r1n, w| shear_newtonian_coeff(fp, fc, r1n, w, t))
}

pub(crate) fn shear_sgf_profile(fp: &FluidParams, fc: &FlowConfig, basis: &ModeBasis, t: f64) -> ModalProfile {
    build(fc, basis, 0.0, RadialShape::J2, |r1n, w| shear_sgf_coeff(fp, fc, r1n, w, t))
}
