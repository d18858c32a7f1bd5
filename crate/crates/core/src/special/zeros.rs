//! Positive zeros of J1 and the mode basis built on them.

use std::f64::consts::PI;

use super::bessel::{j1, j2};
use crate::error::{Error, Result};

/// Table of the first N positive roots r_n of J1(R r) = 0 together with the
/// values J2(R r_n), shared by every modal series in the crate.
#[derive(Debug, Clone, PartialEq)]
pub struct ModeBasis {
    radius: f64,
    zeros: Vec<f64>,
    weights: Vec<f64>,
}

impl ModeBasis {
    pub fn radius(&self) -> f64 {
        self.radius
    }

    /// r_n, in units of 1/length.
    pub fn zeros(&self) -> &[f64] {
        &self.zeros
    }

    /// J2(R r_n).
    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.zeros.len()
    }

    pub fn is_empty(&self) -> bool {
        self.zeros.is_empty()
    }

    /// J1(r r_n), defined to be exactly zero on the wall r = R.
    pub fn j1_at(&self, r: f64, n: usize) -> f64 {
        if r == self.radius {
            0.0
        } else {
            j1(r * self.zeros[n])
        }
    }

    /// J2(r r_n).
    pub fn j2_at(&self, r: f64, n: usize) -> f64 {
        if r == self.radius {
            self.weights[n]
        } else {
            j2(r * self.zeros[n])
        }
    }

    /// A basis holding only the listed modes (0-based indices) of `self`.
    pub fn select(&self, modes: &[usize]) -> ModeBasis {
        ModeBasis {
            radius: self.radius,
            zeros: modes.iter().map(|&n| self.zeros[n]).collect(),
            weights: modes.iter().map(|&n| self.weights[n]).collect(),
        }
    }
}

/// McMahon's expansion for the n-th zero of J1.
fn mcmahon(n: usize) -> f64 {
    let b = (n as f64 + 0.25) * PI;
    let mu = 4.0;
    let b8 = 8.0 * b;
    b - (mu - 1.0) / b8
        - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * b8.powi(3))
        - 32.0 * (mu - 1.0) * (83.0 * mu * mu - 982.0 * mu + 3779.0) / (15.0 * b8.powi(5))
}

/// Bisection for the n-th zero of J1, run to the resolution of f64.
fn bisect_zero(n: usize) -> Result<f64> {
    let guess = mcmahon(n);
    let half_width = if n < 5 { 0.5 } else { 0.25 };
    let (mut lo, mut hi) = (guess - half_width, guess + half_width);
    let (mut flo, fhi) = (j1(lo), j1(hi));
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo.signum() == fhi.signum() {
        return Err(Error::Bracket { n });
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let fmid = j1(mid);
        if fmid == 0.0 {
            return Ok(mid);
        }
        if fmid.signum() == flo.signum() {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    Ok(if j1(lo).abs() <= j1(hi).abs() { lo } else { hi })
}

/// First `n_max` positive roots r_n of J1(R r) = 0, with J2(R r_n).
pub fn bessel_j1_zeros(radius: f64, n_max: usize) -> Result<ModeBasis> {
    if !(radius > 0.0 && radius.is_finite()) {
        return Err(Error::invalid("R", format!("radius must be positive, got {radius}")));
    }
    if n_max == 0 {
        return Err(Error::invalid("n_max", "at least one zero is required"));
    }
    let mut zeros = Vec::with_capacity(n_max);
    let mut weights = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let x = bisect_zero(n)?;
        if j1(x).abs() >= 1e-12 {
            return Err(Error::Bracket { n });
        }
        zeros.push(x / radius);
        weights.push(j2(x));
    }
    Ok(ModeBasis {
        radius,
        zeros,
        weights,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_three_unit_radius() {
        let b = bessel_j1_zeros(1.0, 3).unwrap();
        let expect = [3.831_705_970_2, 7.015_586_669_8, 10.173_468_135_1];
        for (z, e) in b.zeros().iter().zip(expect) {
            assert!((z - e).abs() < 1e-9, "{z} vs {e}");
        }
    }

    #[test]
    fn radius_scaling() {
        let b = bessel_j1_zeros(2.0, 1).unwrap();
        assert!((b.zeros()[0] - 1.915_852_985_1).abs() < 1e-9);
    }

    #[test]
    fn first_weight() {
        // J2(j_{1,1}) = -J0(j_{1,1}) = +0.4027593957...
        let b = bessel_j1_zeros(1.0, 1).unwrap();
        assert!((b.weights()[0] - 0.402_759_395_7).abs() < 1e-9);
    }

    #[test]
    fn invariants_hold_for_many_zeros() {
        let b = bessel_j1_zeros(1.0, 400).unwrap();
        for (n, w) in b.zeros().windows(2).enumerate() {
            assert!(w[1] > w[0]);
            if n + 1 >= 10 {
                assert!((w[1] - w[0] - PI).abs() < 0.05);
            }
        }
        for &z in b.zeros() {
            assert!(j1(z).abs() < 1e-12);
        }
        // weights alternate in sign: J2(j_{1,n}) = -J0(j_{1,n})
        for (n, w) in b.weights().iter().enumerate() {
            assert_eq!(w.signum(), if n % 2 == 0 { 1.0 } else { -1.0 });
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(bessel_j1_zeros(0.0, 3).is_err());
        assert!(bessel_j1_zeros(1.0, 0).is_err());
    }

    #[test]
    fn wall_values_are_exact() {
        let b = bessel_j1_zeros(1.5, 5).unwrap();
        for n in 0..5 {
            assert_eq!(b.j1_at(1.5, n), 0.0);
            assert_eq!(b.j2_at(1.5, n), b.weights()[n]);
        }
    }
}
