use fracflow::analytic::{shear, shear_newtonian, shear_sgf};
use fracflow::special::bessel_j1_zeros;
use fracflow::{FlowConfig, FluidParams};

fn main() -> fracflow::Result<()> {
    let fc = FlowConfig::new(1.0, 1.0)?;
    let basis = bessel_j1_zeros(fc.radius, fc.n_modes)?;
    let newtonian = FluidParams::newtonian(1.0, 1.0)?;
    let second_grade = FluidParams::new(1.0, 0.5, 1.0, 1.0)?;
    let fractional = FluidParams::new(1.0, 0.5, 1.0, 0.5)?;
    let r = 0.75;

    println!("shear stress at r = {r}");
    println!("{:>5} {:>14} {:>14} {:>14} {:>16}", "t", "newtonian", "second grade", "beta = 0.5", "method");
    for t in [0.0, 0.05, 0.2, 0.5, 1.0, 2.0] {
        let f = shear(&fractional, &fc, &basis, r, t)?;
        println!(
            "{t:>5} {:>14.9} {:>14.9} {:>14.9} {:>16}",
            shear_newtonian(&newtonian, &fc, &basis, r, t)?.value,
            shear_sgf(&second_grade, &fc, &basis, r, t)?.value,
            f.value,
            f.method
        );
    }
    Ok(())
}
