//! Velocity across the cylinder for a few fractional orders.

use fracflow::analytic::velocity_field;
use fracflow::special::bessel_j1_zeros;
use fracflow::{FlowConfig, FluidParams};

fn main() -> fracflow::Result<()> {
    let fc = FlowConfig::new(1.0, 1.0)?;
    let basis = bessel_j1_zeros(fc.radius, fc.n_modes)?;
    let radii: Vec<f64> = (0..=10).map(|i| i as f64 / 10.0).collect();
    let t = 0.5;

    print!("{:>5}", "r");
    let betas = [0.2, 0.5, 0.8, 1.0];
    for beta in betas {
        print!("  beta={beta:<10}");
    }
    println!();
    let mut columns = Vec::new();
    for beta in betas {
        let fp = FluidParams::new(1.0, 0.5, 1.0, beta)?;
        columns.push(velocity_field(&fp, &fc, &basis, &radii, &[t])?);
    }
    for (i, r) in radii.iter().enumerate() {
        print!("{r:>5.2}");
        for c in &columns {
            print!("  {:<15.10}", c.value(i, 0));
        }
        println!();
    }
    Ok(())
}
