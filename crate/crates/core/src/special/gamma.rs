//! Gamma function, its logarithm and its reciprocal.

use std::f64::consts::PI;

use crate::error::{Error, Result};

const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

/// sin(pi x) with exact argument reduction.
pub(crate) fn sin_pi(x: f64) -> f64 {
    let mut r = x % 2.0;
    if r > 1.0 {
        r -= 2.0;
    } else if r < -1.0 {
        r += 2.0;
    }
    if r > 0.5 {
        r = 1.0 - r;
    } else if r < -0.5 {
        r = -1.0 - r;
    }
    (PI * r).sin()
}

fn is_pole(x: f64) -> bool {
    x <= 0.0 && x == x.floor()
}

/// Lanczos sum and shifted argument for x >= 0.5.
fn lanczos(x: f64) -> (f64, f64) {
    let z = x - 1.0;
    let mut a = LANCZOS_COEFFS[0];
    for (i, c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        a += c / (z + i as f64);
    }
    (a, z + LANCZOS_G + 0.5)
}

fn gamma_right(x: f64) -> f64 {
    if x > 171.7 {
        return f64::INFINITY;
    }
    if x == x.floor() && x <= 171.0 {
        // exact for n! up to 22!, one rounding per factor beyond
        return (2..x as u32).fold(1.0, |acc, k| acc * k as f64);
    }
    if x >= STIRLING_MIN {
        return stirling(x);
    }
    let (a, t) = lanczos(x);
    (2.0 * PI).sqrt() * t.powf(x - 0.5) * (-t).exp() * a
}

const STIRLING_MIN: f64 = 10.0;

/// Stirling's series Gamma(x) = sqrt(2 pi) x^(x - 1/2) e^(-x) exp(S(x)),
/// with x^(x - 1/2) split in two halves so it stays finite up to x ~ 171.
fn stirling(x: f64) -> f64 {
    (2.0 * PI).sqrt() * {
        let half = x.powf(0.5 * x - 0.25);
        half * (-x).exp() * half
    } * stirling_correction(x).exp()
}

fn stirling_correction(x: f64) -> f64 {
    // B_{2k} / (2k (2k - 1) x^(2k - 1))
    const C: [f64; 7] = [
        1.0 / 12.0,
        -1.0 / 360.0,
        1.0 / 1260.0,
        -1.0 / 1680.0,
        1.0 / 1188.0,
        -691.0 / 360_360.0,
        1.0 / 156.0,
    ];
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    let mut acc = 0.0;
    for c in C.iter().rev() {
        acc = acc * inv2 + c;
    }
    acc * inv
}

/// The Gamma function.
///
/// Uses a Lanczos approximation (g = 7, nine coefficients) on [1/2, 10),
/// Stirling's series above, and the reflection formula for x < 1/2. Poles at the nonpositive
/// integers are reported as errors.
pub fn gamma(x: f64) -> Result<f64> {
    if x.is_nan() {
        return Ok(f64::NAN);
    }
    if is_pole(x) {
        return Err(Error::GammaPole(x));
    }
    if x < 0.5 {
        Ok(PI / (sin_pi(x) * gamma_right(1.0 - x)))
    } else {
        Ok(gamma_right(x))
    }
}

/// 1/Gamma(x). An entire function: exactly zero at the nonpositive
/// integers, underflows gracefully for large positive x.
pub fn reciprocal_gamma(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if is_pole(x) {
        return 0.0;
    }
    if x < 0.5 {
        return sin_pi(x) * gamma_right(1.0 - x) / PI;
    }
    if x > 171.0 {
        let (lg, _) = ln_gamma(x);
        return (-lg).exp();
    }
    1.0 / gamma_right(x)
}

/// ln|Gamma(x)| together with the sign of Gamma(x).
///
/// At the poles this returns (+inf, 1).
pub fn ln_gamma(x: f64) -> (f64, f64) {
    if is_pole(x) {
        return (f64::INFINITY, 1.0);
    }
    if x < 0.5 {
        let s = sin_pi(x);
        let (lg, _) = ln_gamma(1.0 - x);
        return ((PI / s.abs()).ln() - lg, s.signum());
    }
    if x <= 20.0 {
        return (gamma_right(x).ln(), 1.0);
    }
    (LN_SQRT_2PI + (x - 0.5) * x.ln() - x + stirling_correction(x), 1.0)
}

/// ln of the generalized binomial coefficient Gamma(c + j) / (Gamma(c) j!)
/// for c > 0, accumulated as a running product of (c + i - 1) / i.
pub(crate) fn ln_pochhammer_ratio(c: f64, j: usize) -> f64 {
    (1..=j).map(|i| ((c + i as f64 - 1.0) / i as f64).ln()).sum()
}
