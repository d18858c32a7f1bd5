//! Mode-resolved fields.
//!
//! Every solution in this crate has the form
//! `f(r, t) = a(t) r + sum_n c_n(t) J_m(r r_n)` with m = 1 for the velocity and
//! m = 2 for the stress, so the time-dependent coefficients are computed once
//! per instant and reused for every radius.

use std::fmt;

use crate::special::{KahanSum, ModeBasis};

/// How a value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Method {
    /// Closed forms and convergent series only.
    Series,
    /// At least one mode was evaluated by numerical Laplace inversion
    /// because its series lost too many digits to cancellation.
    OracleFallback,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Series => "series",
            Method::OracleFallback => "oracle-fallback",
        }
    }

    pub fn parse(s: &str) -> Option<Method> {
        match s {
            "series" => Some(Method::Series),
            "oracle-fallback" => Some(Method::OracleFallback),
            _ => None,
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Which Bessel function carries the radial dependence of the modes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RadialShape {
    J1,
    J2,
}

/// A point value with its diagnostics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Evaluation {
    pub value: f64,
    pub method: Method,
    /// Largest cancellation indicator met among the series that were used
    /// (1 for closed forms).
    pub cancellation: f64,
    /// Estimated magnitude of the modes dropped beyond `n_modes`.
    pub tail_estimate: f64,
}

/// Time-frozen modal expansion of a velocity or stress field.
#[derive(Debug, Clone, PartialEq)]
pub struct ModalProfile {
    pub(crate) rigid: f64,
    pub(crate) coeffs: Vec<f64>,
    pub(crate) shape: RadialShape,
    pub(crate) method: Method,
    pub(crate) cancellation: f64,
    pub(crate) fallback_modes: usize,
}

impl ModalProfile {
    pub(crate) fn new(rigid: f64, coeffs: Vec<f64>, shape: RadialShape) -> Self {
        ModalProfile {
            rigid,
            coeffs,
            shape,
            method: Method::Series,
            cancellation: 1.0,
            fallback_modes: 0,
        }
    }

    /// Coefficient of the rigid-rotation term `r`.
    pub fn rigid(&self) -> f64 {
        self.rigid
    }

    /// Mode coefficients c_n(t).
    pub fn coefficients(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn shape(&self) -> RadialShape {
        self.shape
    }

    pub fn method(&self) -> Method {
        self.method
    }

    pub fn cancellation(&self) -> f64 {
        self.cancellation
    }

    /// Number of modes that had to be evaluated by Laplace inversion.
    pub fn fallback_modes(&self) -> usize {
        self.fallback_modes
    }

    /// Field value at radius r.
    pub fn eval(&self, basis: &ModeBasis, r: f64) -> f64 {
        let mut acc = KahanSum::new();
        acc.add(self.rigid * r);
        for (n, c) in self.coeffs.iter().enumerate() {
            if *c == 0.0 {
                continue;
            }
            let radial = match self.shape {
                RadialShape::J1 => basis.j1_at(r, n),
                RadialShape::J2 => basis.j2_at(r, n),
            };
            acc.add(c * radial);
        }
        acc.value()
    }

    /// Magnitude of the last retained mode times the remaining count implied
    /// by the r_n^(-p) decay of the coefficients (p = 3 for the velocity,
    /// p = 2 for the stress).
    pub fn tail_estimate(&self, basis: &ModeBasis) -> f64 {
        let n = self.coeffs.len();
        if n == 0 {
            return 0.0;
        }
        let last = self.coeffs[n - 1].abs() * (2.0 / (std::f64::consts::PI * basis.zeros()[n - 1] * basis.radius())).sqrt();
        let p = match self.shape {
            RadialShape::J1 => 3.0,
            RadialShape::J2 => 2.0,
        };
        last * n as f64 / (p - 1.0)
    }

    pub fn evaluation(&self, basis: &ModeBasis, r: f64) -> Evaluation {
        Evaluation {
            value: self.eval(basis, r),
            method: self.method,
            cancellation: self.cancellation,
            tail_estimate: self.tail_estimate(basis),
        }
    }
}

