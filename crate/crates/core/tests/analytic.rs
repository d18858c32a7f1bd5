//! Analytic stack against frozen 25-digit Talbot inversions of the exact
//! transforms (50 modes, nu = rho = R = Omega = 1).

use fracflow::analytic::{shear, shear_newtonian, shear_sgf, velocity, velocity_newtonian, velocity_sgf};
use fracflow::special::{bessel_j1_zeros, ModeBasis};
use fracflow::{FlowConfig, FluidParams, Method};

fn setup(alpha: f64, beta: f64) -> (FluidParams, FlowConfig, ModeBasis) {
    let fp = FluidParams::new(1.0, alpha, 1.0, beta).unwrap();
    let fc = FlowConfig::new(1.0, 1.0).unwrap().with_modes(50);
    let basis = bessel_j1_zeros(1.0, 50).unwrap();
    (fp, fc, basis)
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

const VELOCITY_HALF: [(f64, f64, f64); 9] = [
    (0.25, 0.2, 0.035972871353748694),
    (0.25, 0.5, 0.10643366271203838),
    (0.25, 1.0, 0.2286113430050395),
    (0.5, 0.2, 0.07726472930985125),
    (0.5, 0.5, 0.22015276583075094),
    (0.5, 1.0, 0.465709794360843),
    (0.75, 0.2, 0.1296848837739965),
    (0.75, 0.5, 0.34868119399684444),
    (0.75, 1.0, 0.7198983840391107),
];

#[test]
fn fractional_velocity_reference() {
    let (fp, fc, basis) = setup(0.5, 0.5);
    for (r, t, expect) in VELOCITY_HALF {
        let v = velocity(&fp, &fc, &basis, r, t).unwrap();
        assert!(rel(v.value, expect) < 1e-5, "r {r} t {t}: {} vs {expect}", v.value);
    }
}

#[test]
fn fractional_shear_reference() {
    let (fp, fc, basis) = setup(0.5, 0.5);
    for (r, expect) in [(0.25, 0.015059038935254548), (0.5, 0.060442310384574), (0.75, 0.13743649321816265)] {
        let s = shear(&fp, &fc, &basis, r, 0.5).unwrap();
        assert!(rel(s.value, expect) < 1e-5, "r {r}: {} vs {expect}", s.value);
    }
    let (fp, fc, basis) = setup(0.3, 0.5);
    let s = shear(&fp, &fc, &basis, 0.5, 0.5).unwrap();
    assert!(rel(s.value, 0.060695273505367) < 1e-5);
}

#[test]
fn early_times() {
    // (alpha, beta, t, velocity, stress) at r = 0.5
    let cases = [
        (0.1, 0.5, 0.02, 0.000742693087687767, 0.008031024925873997),
        (0.1, 0.5, 0.05, 0.0057745551336797875, 0.02509726259017569),
        (0.2, 0.3, 0.05, 0.005677649968025304, 0.026543754543372107),
        (0.2, 0.8, 0.05, 0.013558553776339218, 0.038687750179822844),
        (1.0, 0.5, 0.01, 0.0021072195941479977, 0.03432186507692369),
    ];
    for (alpha, beta, t, v_ref, s_ref) in cases {
        let (fp, fc, basis) = setup(alpha, beta);
        let v = velocity(&fp, &fc, &basis, 0.5, t).unwrap();
        let s = shear(&fp, &fc, &basis, 0.5, t).unwrap();
        assert!(rel(v.value, v_ref) < 1e-5, "velocity {alpha} {beta} {t}: {} vs {v_ref}", v.value);
        assert!(rel(s.value, s_ref) < 1e-5, "stress {alpha} {beta} {t}: {} vs {s_ref}", s.value);
    }
}

#[test]
fn near_unit_order_reference() {
    // beta = 0.999; (alpha, r, t, velocity)
    let cases = [
        (1.0, 0.5, 1.0, 0.47158618476975767),
        (0.5, 0.25, 0.1, 0.02036522877307363),
        (0.2, 0.75, 2.0, 1.4590103148302833),
    ];
    for (alpha, r, t, expect) in cases {
        let (fp, fc, basis) = setup(alpha, 0.999);
        let v = velocity(&fp, &fc, &basis, r, t).unwrap();
        assert!(rel(v.value, expect) < 1e-5, "{alpha} {r} {t}: {} vs {expect}", v.value);
    }
}

#[test]
fn wall_rotates_rigidly() {
    let (fp, fc, basis) = setup(0.5, 0.5);
    for t in [0.0, 0.3, 1.7] {
        assert_eq!(velocity(&fp, &fc, &basis, 1.0, t).unwrap().value, t);
    }
}

#[test]
fn rest_at_start() {
    for beta in [0.3, 0.5, 0.8] {
        let (fp, fc, basis) = setup(0.5, beta);
        for r in [0.0, 0.4, 0.9] {
            assert_eq!(velocity(&fp, &fc, &basis, r, 0.0).unwrap().value, 0.0);
            assert_eq!(shear(&fp, &fc, &basis, r, 0.0).unwrap().value, 0.0);
        }
    }
}

#[test]
fn second_grade_closed_forms_reduce_to_newtonian() {
    let (fp, fc, basis) = setup(0.0, 1.0);
    for (r, t) in [(0.3, 0.1), (0.6, 0.8), (0.9, 2.0)] {
        let v0 = velocity_newtonian(&fp, &fc, &basis, r, t).unwrap().value;
        let v1 = velocity_sgf(&fp, &fc, &basis, r, t).unwrap().value;
        let s0 = shear_newtonian(&fp, &fc, &basis, r, t).unwrap().value;
        let s1 = shear_sgf(&fp, &fc, &basis, r, t).unwrap().value;
        assert!(rel(v1, v0) < 1e-12 && rel(s1, s0) < 1e-12);
    }
}

#[test]
fn newtonian_dispatch_is_exact() {
    let (fp, fc, basis) = setup(0.0, 0.6);
    let v = velocity(&fp, &fc, &basis, 0.4, 0.7).unwrap();
    assert_eq!(v.value, velocity_newtonian(&fp, &fc, &basis, 0.4, 0.7).unwrap().value);
    assert_eq!(v.method, Method::Series);
    let s = shear(&fp, &fc, &basis, 0.4, 0.7).unwrap();
    assert_eq!(s.value, shear_newtonian(&fp, &fc, &basis, 0.4, 0.7).unwrap().value);
}

#[test]
fn out_of_domain_radius_is_rejected() {
    let (fp, fc, basis) = setup(0.5, 0.5);
    assert!(velocity(&fp, &fc, &basis, 1.2, 0.5).is_err());
    assert!(shear(&fp, &fc, &basis, -0.1, 0.5).is_err());
}
