//! Material constants, geometry and numerical controls.

use crate::error::{Error, Result};

/// Material constants of a generalized second grade fluid.
///
/// `alpha` = alpha1 / rho carries units of m^2 s^(beta - 1); it is kept as a
/// plain positive number. The dynamic viscosity `mu = rho nu` and the normal
/// stress modulus `alpha1 = rho alpha` are derived.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FluidParams {
    nu: f64,
    alpha: f64,
    rho: f64,
    beta: f64,
}

impl FluidParams {
    pub fn new(nu: f64, alpha: f64, rho: f64, beta: f64) -> Result<Self> {
        if !(nu > 0.0 && nu.is_finite()) {
            return Err(Error::invalid("nu", format!("kinematic viscosity must be positive, got {nu}")));
        }
        if !(alpha >= 0.0 && alpha.is_finite()) {
            return Err(Error::invalid("alpha", format!("alpha must be nonnegative (alpha1 >= 0), got {alpha}")));
        }
        if !(rho > 0.0 && rho.is_finite()) {
            return Err(Error::invalid("rho", format!("density must be positive, got {rho}")));
        }
        if !(beta > 0.0 && beta <= 1.0) {
            return Err(Error::invalid("beta", format!("fractional order must lie in (0, 1], got {beta}")));
        }
        Ok(FluidParams { nu, alpha, rho, beta })
    }

    /// Newtonian fluid (alpha = 0, beta = 1).
    pub fn newtonian(nu: f64, rho: f64) -> Result<Self> {
        Self::new(nu, 0.0, rho, 1.0)
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn rho(&self) -> f64 {
        self.rho
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn mu(&self) -> f64 {
        self.rho * self.nu
    }

    pub fn alpha1(&self) -> f64 {
        self.rho * self.alpha
    }

    pub fn with_beta(&self, beta: f64) -> Result<Self> {
        Self::new(self.nu, self.alpha, self.rho, beta)
    }

    pub fn with_alpha(&self, alpha: f64) -> Result<Self> {
        Self::new(self.nu, alpha, self.rho, self.beta)
    }
}

/// Cylinder geometry, wall forcing and numerical controls.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FlowConfig {
    /// Cylinder radius R (m).
    pub radius: f64,
    /// Angular acceleration of the wall, which turns with angular velocity Omega t.
    pub omega: f64,
    /// Number of Bessel modes kept in every series.
    pub n_modes: usize,
    /// Relative truncation tolerance of the G-function and k-series.
    pub series_tol: f64,
    /// Relative tolerance of the convolution quadrature.
    pub quad_tol: f64,
    /// Cap on the k-series (powers of -nu r_n^2).
    pub k_max: usize,
    /// Cap on the j-series inside each G-function (powers of -alpha r_n^2).
    pub j_max: usize,
    /// A mode whose series cancellation indicator exceeds this value is
    /// evaluated by numerical Laplace inversion instead.
    pub cancellation_limit: f64,
    /// Number of Gaver–Stehfest nodes used by the inversion oracle.
    pub stehfest_n: usize,
}

impl FlowConfig {
    pub const DEFAULT_N_MODES: usize = 50;
    pub const DEFAULT_SERIES_TOL: f64 = 1e-10;
    pub const DEFAULT_QUAD_TOL: f64 = 1e-9;
    pub const DEFAULT_SERIES_CAP: usize = 200;
    pub const DEFAULT_CANCELLATION_LIMIT: f64 = 1e4;
    pub const DEFAULT_STEHFEST_N: usize = 14;

    pub fn new(radius: f64, omega: f64) -> Result<Self> {
        let cfg = FlowConfig {
            radius,
            omega,
            n_modes: Self::DEFAULT_N_MODES,
            series_tol: Self::DEFAULT_SERIES_TOL,
            quad_tol: Self::DEFAULT_QUAD_TOL,
            k_max: Self::DEFAULT_SERIES_CAP,
            j_max: Self::DEFAULT_SERIES_CAP,
            cancellation_limit: Self::DEFAULT_CANCELLATION_LIMIT,
            stehfest_n: Self::DEFAULT_STEHFEST_N,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn with_modes(mut self, n_modes: usize) -> Self {
        self.n_modes = n_modes;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.radius > 0.0 && self.radius.is_finite()) {
            return Err(Error::invalid("R", format!("radius must be positive, got {}", self.radius)));
        }
        if !self.omega.is_finite() {
            return Err(Error::invalid("Omega", "must be finite"));
        }
        if self.n_modes == 0 {
            return Err(Error::invalid("n_modes", "at least one mode is required"));
        }
        for (name, v) in [("series_tol", self.series_tol), ("quad_tol", self.quad_tol)] {
            if !(v > 0.0 && v <= 1e-2) {
                return Err(Error::invalid(name, format!("tolerance must lie in (0, 1e-2], got {v}")));
            }
        }
        if self.k_max == 0 || self.j_max == 0 {
            return Err(Error::invalid("k_max", "series caps must be positive"));
        }
        if !(self.cancellation_limit >= 1.0) {
            return Err(Error::invalid("cancellation_limit", "must be at least 1"));
        }
        if self.stehfest_n % 2 != 0 || !(8..=20).contains(&self.stehfest_n) {
            return Err(Error::invalid("stehfest_n", "must be even and in [8, 20]"));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derived_moduli() {
        let fp = FluidParams::new(2.0, 0.5, 3.0, 0.7).unwrap();
        assert_eq!(fp.mu(), 6.0);
        assert_eq!(fp.alpha1(), 1.5);
    }

    #[test]
    fn parameter_ranges() {
        assert!(FluidParams::new(1.0, 0.0, 1.0, 1.0).is_ok());
        assert!(FluidParams::new(0.0, 0.0, 1.0, 1.0).is_err());
        assert!(FluidParams::new(1.0, -0.1, 1.0, 1.0).is_err());
        assert!(FluidParams::new(1.0, 0.1, 0.0, 1.0).is_err());
        assert!(FluidParams::new(1.0, 0.1, 1.0, 0.0).is_err());
        assert!(FluidParams::new(1.0, 0.1, 1.0, 1.5).is_err());
        match FluidParams::new(1.0, 0.1, 1.0, 1.5) {
            Err(Error::InvalidParameter { name, reason }) => {
                assert_eq!(name, "beta");
                assert!(reason.contains("(0, 1]"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn flow_config_checks() {
        assert!(FlowConfig::new(1.0, 1.0).is_ok());
        assert!(FlowConfig::new(-1.0, 1.0).is_err());
        let mut c = FlowConfig::new(1.0, 1.0).unwrap();
        c.quad_tol = 0.5;
        assert!(c.validate().is_err());
        c.quad_tol = 1e-9;
        c.stehfest_n = 13;
        assert!(c.validate().is_err());
    }
}
