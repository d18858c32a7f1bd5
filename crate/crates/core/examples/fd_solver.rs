//! Finite-difference spin-up against the series solution.

use std::time::Instant;

use fracflow::analytic::velocity;
use fracflow::fd::{simulate, Grid};
use fracflow::special::bessel_j1_zeros;
use fracflow::{FlowConfig, FluidParams};

fn main() -> fracflow::Result<()> {
    let fp = FluidParams::new(1.0, 0.5, 1.0, 0.5)?;
    let fc = FlowConfig::new(1.0, 1.0)?;
    let basis = bessel_j1_zeros(fc.radius, fc.n_modes)?;

    for (nr, dt) in [(26, 1e-3), (51, 2.5e-4), (101, 6.25e-5)] {
        let grid = Grid::until(nr, dt, 1.0, fc.radius)?;
        let start = Instant::now();
        let field = simulate(&fp, &fc, &grid)?;
        let mut worst: f64 = 0.0;
        for r in [0.25, 0.5, 0.75] {
            for t in [0.2, 0.5, 1.0] {
                let exact = velocity(&fp, &fc, &basis, r, t)?.value;
                worst = worst.max((field.sample(r, t)? - exact).abs() / exact);
            }
        }
        println!("nr {nr:>4}  dt {dt:>8.2e}  steps {:>6}  max rel error {worst:.2e}  ({:.2} s)", grid.nt(), start.elapsed().as_secs_f64());
    }
    Ok(())
}
