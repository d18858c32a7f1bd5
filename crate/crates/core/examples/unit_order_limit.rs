//! As beta -> 1 the fractional velocity approaches the second grade closed form.

use fracflow::analytic::{velocity, velocity_sgf};
use fracflow::special::bessel_j1_zeros;
use fracflow::{FlowConfig, FluidParams};

fn main() -> fracflow::Result<()> {
    let fc = FlowConfig::new(1.0, 1.0)?;
    let basis = bessel_j1_zeros(fc.radius, fc.n_modes)?;
    let (r, t) = (0.5, 1.0);
    let limit = velocity_sgf(&FluidParams::new(1.0, 0.5, 1.0, 1.0)?, &fc, &basis, r, t)?.value;
    println!("second grade: {limit:.12}");
    for beta in [0.9, 0.99, 0.999, 0.9999] {
        let v = velocity(&FluidParams::new(1.0, 0.5, 1.0, beta)?, &fc, &basis, r, t)?;
        println!("beta {beta:<7} {:.12}  gap {:.2e}  [{}]", v.value, (v.value - limit).abs() / limit, v.method);
    }
    Ok(())
}
