//! Gaver–Stehfest numerical inversion of Laplace transforms.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::special::KahanSum;

const LN2: f64 = std::f64::consts::LN_2;

fn binomial(n: u32, k: u32) -> i128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    acc
}

/// Stehfest weights V_1..V_N, built from the integer form
/// V_i = (-1)^(i+M) / M! * sum_k k^(M+1) C(2k,k) C(M,k) C(k,i-k),  M = N/2,
/// so each weight carries a single rounding.
fn compute_weights(n: usize) -> Vec<f64> {
    let m = (n / 2) as u32;
    let m_fact: i128 = (1..=m as i128).product();
    (1..=n as u32)
        .map(|i| {
            let lo = i.div_ceil(2);
            let hi = i.min(m);
            let s: i128 = (lo..=hi)
                .map(|k| (k as i128).pow(m + 1) * binomial(2 * k, k) * binomial(m, k) * binomial(k, i - k))
                .sum();
            let sign = if (i + m) % 2 == 0 { 1.0 } else { -1.0 };
            sign * (s as f64 / m_fact as f64)
        })
        .collect()
}

/// Cached weights for even N in [8, 20].
pub fn stehfest_weights(n: usize) -> Result<&'static [f64]> {
    static TABLE: OnceLock<Vec<Vec<f64>>> = OnceLock::new();
    if n % 2 != 0 || !(8..=20).contains(&n) {
        return Err(Error::invalid("N", format!("Stehfest order must be even and in [8, 20], got {n}")));
    }
    let table = TABLE.get_or_init(|| (0..=20).map(|k| if k % 2 == 0 && k >= 2 { compute_weights(k) } else { Vec::new() }).collect());
    Ok(&table[n])
}

/// f(t) = (ln 2 / t) sum_i V_i F(i ln 2 / t).
pub fn stehfest_invert<F: Fn(f64) -> f64>(transform: F, t: f64, n: usize) -> Result<f64> {
    if !(t > 0.0 && t.is_finite()) {
        return Err(Error::Inversion(format!("time must be positive and finite, got {t}")));
    }
    let weights = stehfest_weights(n)?;
    let h = LN2 / t;
    let mut acc = KahanSum::new();
    for (i, v) in weights.iter().enumerate() {
        acc.add(v * transform((i + 1) as f64 * h));
    }
    let value = h * acc.value();
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::Inversion(format!("non-finite result at t = {t}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_orders_match_known_weights() {
        assert_eq!(compute_weights(2), vec![2.0, -2.0]);
        assert_eq!(compute_weights(4), vec![-2.0, 26.0, -48.0, 24.0]);
    }

    #[test]
    fn weights_sum_to_zero() {
        for n in (8..=20).step_by(2) {
            let w = stehfest_weights(n).unwrap();
            let s: f64 = w.iter().sum();
            assert!(s.abs() < 1e-6 * w.iter().map(|v| v.abs()).fold(0.0, f64::max));
        }
    }

    #[test]
    fn ramp_error_follows_order() {
        // exact-arithmetic errors for 1/q^2 at t = 2: N=14 -3.6115e-7, N=16 -4.34e-8
        let v14 = stehfest_invert(|q| 1.0 / (q * q), 2.0, 14).unwrap();
        assert!(((v14 - 2.0) / 2.0 + 3.6115e-7).abs() < 1e-9);
        let v16 = stehfest_invert(|q| 1.0 / (q * q), 2.0, 16).unwrap();
        assert!(((v16 - 2.0) / 2.0).abs() < 1e-7);
    }

    #[test]
    fn exponential() {
        let e = stehfest_invert(|q| 1.0 / (q + 1.0), 1.0, 14).unwrap();
        assert!((e - (-1.0_f64).exp()).abs() < 1e-6);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(stehfest_invert(|q| 1.0 / q, 0.0, 14).is_err());
        assert!(stehfest_invert(|q| 1.0 / q, 1.0, 13).is_err());
        assert!(stehfest_invert(|q| 1.0 / q, 1.0, 22).is_err());
    }
}
