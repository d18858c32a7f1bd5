//! First zeros of J1(R r) and the wall values J2(R r_n) they pair with.

use fracflow::special::{bessel_j1_zeros, j1};

fn main() -> fracflow::Result<()> {
    let radius = 0.5;
    let basis = bessel_j1_zeros(radius, 8)?;
    println!("{:>3} {:>20} {:>20} {:>12}", "n", "r_n", "J2(R r_n)", "J1(R r_n)");
    for (n, (&z, &w)) in basis.zeros().iter().zip(basis.weights()).enumerate() {
        println!("{:>3} {z:>20.15} {w:>20.15} {:>12.1e}", n + 1, j1(radius * z));
    }
    Ok(())
}
