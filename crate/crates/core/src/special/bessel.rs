//! Bessel functions of the first kind of orders 0, 1 and 2 for real
//! arguments.
//!
//! Below [`SERIES_LIMIT`] the ascending power series is summed in
//! double-double arithmetic, which absorbs the cancellation between its
//! alternating terms; above it the Hankel asymptotic expansion is used.
//! J2 comes from the three-term recurrence, carried out in double-double on
//! the series branch so it stays accurate down to x ~ 1e-4.

use std::f64::consts::{FRAC_PI_4, PI};

use super::ddouble::DoubleDouble;

/// Crossover between the power series and the asymptotic expansion. At this
/// point the asymptotic remainder is ~exp(-2x) ~ 4e-18.
pub const SERIES_LIMIT: f64 = 20.0;

const TINY_ARGUMENT: f64 = 1e-4;

/// J_n(x) for n in {0, 1, 2}.
///
/// # Panics
///
/// Panics if `order > 2`.
pub fn bessel_j(order: u32, x: f64) -> f64 {
    match order {
        0 => j0(x),
        1 => j1(x),
        2 => j2(x),
        _ => panic!("bessel_j supports orders 0, 1 and 2, got {order}"),
    }
}

pub fn j0(x: f64) -> f64 {
    let x = x.abs();
    if x < SERIES_LIMIT {
        series(0, x).to_f64()
    } else {
        hankel(0, x)
    }
}

pub fn j1(x: f64) -> f64 {
    let sign = x.signum();
    let x = x.abs();
    let v = if x < SERIES_LIMIT {
        series(1, x).to_f64()
    } else {
        hankel(1, x)
    };
    sign * v
}

pub fn j2(x: f64) -> f64 {
    let x = x.abs();
    if x < TINY_ARGUMENT {
        return series(2, x).to_f64();
    }
    if x < SERIES_LIMIT {
        let j0 = series(0, x);
        let j1 = series(1, x);
        (j1.mul_f64(2.0).div_f64(x) - j0).to_f64()
    } else {
        2.0 / x * hankel(1, x) - hankel(0, x)
    }
}

/// J1'(x) = J0(x) - J1(x)/x, with the limit 1/2 at the origin.
pub fn j1_prime(x: f64) -> f64 {
    if x == 0.0 {
        0.5
    } else {
        j0(x) - j1(x) / x
    }
}

/// Ascending series sum_k (-1)^k (x/2)^(2k+n) / (k! (k+n)!) in double-double.
fn series(n: u32, x: f64) -> DoubleDouble {
    if x == 0.0 {
        return if n == 0 {
            DoubleDouble::from_f64(1.0)
        } else {
            DoubleDouble::ZERO
        };
    }
    let half = DoubleDouble::from_f64(0.5 * x);
    let y = half * half;
    let mut term = DoubleDouble::from_f64(1.0);
    for i in 1..=n {
        term = (term * half).div_f64(i as f64);
    }
    let mut sum = term;
    let mut k = 1u32;
    loop {
        term = -(term * y).div_f64((k * (k + n)) as f64);
        sum = sum + term;
        if term.abs_hi() < 1e-34 * sum.abs_hi().max(1e-300) || k > 200 {
            break;
        }
        k += 1;
    }
    sum
}

/// Hankel asymptotic expansion
/// J_n(x) ~ sqrt(2/(pi x)) [P cos(chi) - Q sin(chi)], chi = x - (n/2 + 1/4) pi.
fn hankel(n: u32, x: f64) -> f64 {
    let mu = 4.0 * (n * n) as f64;
    let inv8x = 1.0 / (8.0 * x);
    let mut p = 1.0;
    let mut q = 0.0;
    let mut term = 1.0_f64;
    let mut prev = f64::INFINITY;
    for k in 1..60u32 {
        let odd = (2 * k - 1) as f64;
        term *= (mu - odd * odd) * inv8x / k as f64;
        if term.abs() >= prev || term == 0.0 {
            break;
        }
        prev = term.abs();
        match k % 4 {
            1 => q += term,
            2 => p -= term,
            3 => q -= term,
            _ => p += term,
        }
        if term.abs() < 1e-17 {
            break;
        }
    }
    // cos(x - phi) and sin(x - phi) expanded so the large argument is only
    // ever reduced once, by the library sin/cos.
    let phi = (n as f64 * 0.5) * PI + FRAC_PI_4;
    let (sx, cx) = x.sin_cos();
    let (sp, cp) = phi.sin_cos();
    let cos_chi = cx * cp + sx * sp;
    let sin_chi = sx * cp - cx * sp;
    (2.0 / (PI * x)).sqrt() * (p * cos_chi - q * sin_chi)
}
