use fracflow::quadrature::GaussLegendre;
use fracflow::special::{bessel_j1_zeros, g_function, gamma, j0, j1, j1_prime, j2, reciprocal_gamma, GFunctionParams};
use proptest::prelude::*;

fn g(a: f64, b: f64, c: f64, d: f64, t: f64) -> f64 {
    g_function(&GFunctionParams::new(a, b, c, d, t), 1e-15).unwrap().value
}

proptest! {
    #[test]
    fn bessel_recurrence(x in 0.1f64..50.0) {
        prop_assert!((2.0 / x * j1(x) - j0(x) - j2(x)).abs() < 1e-11);
    }

    #[test]
    fn derivative_identity(x in 0.01f64..80.0) {
        prop_assert!((x * j1_prime(x) - j1(x) + x * j2(x)).abs() < 1e-10);
    }

    #[test]
    fn exponential_g_function(d in -10.0f64..0.0, t in 0.0f64..5.0) {
        let e = (d * t).exp();
        prop_assert!((g(1.0, 0.0, 1.0, d, t) - e).abs() <= 1e-10 * e);
    }
}

#[test]
fn zeros_of_unit_and_double_radius() {
    let b = bessel_j1_zeros(1.0, 3).unwrap();
    for (z, e) in b.zeros().iter().zip([3.8317059702, 7.0155866698, 10.1734681351]) {
        assert!((z - e).abs() < 1e-9);
    }
    let b2 = bessel_j1_zeros(2.0, 1).unwrap();
    assert!((b2.zeros()[0] - 1.9158529851).abs() < 1e-9);
    assert!(j1(3.8317059702075123).abs() < 1e-12);
}

#[test]
fn first_wall_weight_is_positive() {
    // J2 = -J0 at zeros of J1, and J0(3.8317...) < 0
    let b = bessel_j1_zeros(1.0, 1).unwrap();
    assert!((b.weights()[0] - 0.4027593957025531).abs() < 1e-12);
}

#[test]
fn moment_integral() {
    let rule = GaussLegendre::new(20);
    let basis = bessel_j1_zeros(1.0, 5).unwrap();
    for (&z, &w) in basis.zeros().iter().zip(basis.weights()) {
        let pieces = 16;
        let integral: f64 = (0..pieces)
            .map(|k| rule.integrate(|r| r * r * j1(r * z), k as f64 / pieces as f64, (k + 1) as f64 / pieces as f64))
            .sum();
        assert!((integral - w / z).abs() < 1e-8);
    }
}

#[test]
fn gamma_values() {
    assert!((gamma(5.0).unwrap() - 24.0).abs() < 1e-12);
    assert!((gamma(0.5).unwrap() - 1.7724538509055160).abs() < 1e-14);
    assert_eq!(reciprocal_gamma(0.0), 0.0);
    assert_eq!(reciprocal_gamma(-3.0), 0.0);
    assert_eq!(reciprocal_gamma(1.0), 1.0);
}

#[test]
fn unit_order_g_functions() {
    // G_{0,-k-1,k+1}(-x, s) = s^k (1 + x)^{-(k+1)} / k!
    for x in [0.5_f64, 1.0, 2.0] {
        for s in [0.1_f64, 1.0] {
            for k in 0..6 {
                let expect = s.powi(k) / gamma(k as f64 + 1.0).unwrap() / (1.0 + x).powi(k + 1);
                let got = g(0.0, -(k as f64) - 1.0, k as f64 + 1.0, -x, s);
                assert!((got - expect).abs() <= 1e-12 * expect);
            }
        }
    }
}

#[test]
fn unit_order_k_sum_is_an_exponential() {
    for x in [0.5_f64, 1.0, 2.0] {
        for c in [0.5_f64, 1.0] {
            for s in [0.1_f64, 1.0] {
                let sum: f64 = (0..40).map(|k| (-c).powi(k) * g(0.0, -(k as f64) - 1.0, k as f64 + 1.0, -x, s)).sum();
                let expect = (-c * s / (1.0 + x)).exp() / (1.0 + x);
                assert!((sum - expect).abs() <= 1e-9 * expect);
            }
        }
    }
}

#[test]
fn g_function_examples() {
    assert!((g(1.0, 0.0, 1.0, -1.0, 1.0) - 0.36787944117).abs() < 1e-10);
    assert!((g(0.0, -1.0, 1.0, -1.0, 2.0) - 0.5).abs() < 1e-15);
    assert!((g(0.5, -0.5, 1.0, 0.0, 7.0) - 1.0).abs() < 1e-15);
}
