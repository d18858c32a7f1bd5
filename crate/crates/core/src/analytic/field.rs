//! Velocity or stress sampled on an (r, t) grid.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::modal::{Method, ModalProfile};
use crate::params::{FlowConfig, FluidParams};
use crate::special::ModeBasis;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldKind {
    Velocity,
    Stress,
}

impl FieldKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            FieldKind::Velocity => "velocity",
            FieldKind::Stress => "stress",
        }
    }
}

/// Field values on |r_samples| x |t_samples| points with per-entry diagnostics.
#[derive(Debug, Clone, PartialEq)]
pub struct FieldProfile {
    pub kind: FieldKind,
    pub r_samples: Vec<f64>,
    pub t_samples: Vec<f64>,
    /// `values[i][j]` is the field at `r_samples[i]`, `t_samples[j]`.
    pub values: Vec<Vec<f64>>,
    pub methods: Vec<Vec<Method>>,
    pub cancellation: Vec<Vec<f64>>,
}

impl FieldProfile {
    pub fn value(&self, i: usize, j: usize) -> f64 {
        self.values[i][j]
    }

    pub fn method(&self, i: usize, j: usize) -> Method {
        self.methods[i][j]
    }
}

fn sample_field<F>(kind: FieldKind, fc: &FlowConfig, basis: &ModeBasis, r_samples: &[f64], t_samples: &[f64], modes: F) -> Result<FieldProfile>
where
    F: Fn(f64) -> Result<ModalProfile> + Sync,
{
    for &r in r_samples {
        if !(r >= 0.0 && r <= fc.radius) {
            return Err(Error::invalid("r", format!("radius {r} outside [0, {}]", fc.radius)));
        }
    }
    let columns = t_samples
        .par_iter()
        .map(|&t| {
            let p = modes(t)?;
            Ok(r_samples.iter().map(|&r| p.evaluation(basis, r)).collect::<Vec<_>>())
        })
        .collect::<Result<Vec<_>>>()?;
    let nr = r_samples.len();
    let mut values = vec![Vec::with_capacity(t_samples.len()); nr];
    let mut methods = vec![Vec::with_capacity(t_samples.len()); nr];
    let mut cancellation = vec![Vec::with_capacity(t_samples.len()); nr];
    for col in &columns {
        for (i, e) in col.iter().enumerate() {
            values[i].push(e.value);
            methods[i].push(e.method);
            cancellation[i].push(e.cancellation);
        }
    }
    Ok(FieldProfile {
        kind,
        r_samples: r_samples.to_vec(),
        t_samples: t_samples.to_vec(),
        values,
        methods,
        cancellation,
    })
}

/// Velocity of the generalized fluid on a grid; each time is expanded once.
pub fn velocity_field(fp: &FluidParams, fc: &FlowConfig, basis: &ModeBasis, r_samples: &[f64], t_samples: &[f64]) -> Result<FieldProfile> {
    sample_field(FieldKind::Velocity, fc, basis, r_samples, t_samples, |t| super::velocity_modes(fp, fc, basis, t))
}

/// Shear stress of the generalized fluid on a grid.
pub fn shear_field(fp: &FluidParams, fc: &FlowConfig, basis: &ModeBasis, r_samples: &[f64], t_samples: &[f64]) -> Result<FieldProfile> {
    sample_field(FieldKind::Stress, fc, basis, r_samples, t_samples, |t| super::shear_modes(fp, fc, basis, t))
}
