//! Gaver–Stehfest inversion: accuracy against known pairs, then the velocity
//! recovered straight from its Laplace transform.

use fracflow::analytic::velocity;
use fracflow::oracle::{stehfest_invert, velocity_via_inversion};
use fracflow::special::bessel_j1_zeros;
use fracflow::{FlowConfig, FluidParams};

fn main() -> fracflow::Result<()> {
    println!("{:>3} {:>14} {:>14}", "N", "1/q^2 at t=2", "1/(q+1) at t=1");
    for n in (8..=20).step_by(2) {
        let ramp = stehfest_invert(|q| 1.0 / (q * q), 2.0, n)? / 2.0 - 1.0;
        let decay = stehfest_invert(|q| 1.0 / (q + 1.0), 1.0, n)? - (-1.0_f64).exp();
        println!("{n:>3} {ramp:>14.2e} {decay:>14.2e}");
    }

    let fp = FluidParams::new(1.0, 0.5, 1.0, 0.5)?;
    let mut fc = FlowConfig::new(1.0, 1.0)?;
    let basis = bessel_j1_zeros(fc.radius, fc.n_modes)?;
    let series = velocity(&fp, &fc, &basis, 0.5, 0.5)?.value;
    println!("\nvelocity at r = 0.5, t = 0.5: series {series:.12}");
    for n in [10, 14, 18] {
        fc.stehfest_n = n;
        let v = velocity_via_inversion(&fp, &fc, &basis, 0.5, 0.5)?.value;
        println!("  N = {n:>2}: {v:.12}  ({:.1e})", (v - series) / series);
    }
    Ok(())
}
