//! The `compare` report built from a config string.

use fracflow::cli::{parse_config, run_compare};

const CONFIG: &str = "
nu=1
alpha=0.5
rho=1
beta=0.5
R=1
Omega=1
r_samples=0.25,0.5,0.75
t_samples=0.2,0.5,1
compare=oracle,fd
fd_nr=101
fd_dt=1e-4
";

fn main() -> fracflow::Result<()> {
    let report = run_compare(&parse_config(CONFIG)?)?;
    print!("{}", report.to_csv());
    println!();
    print!("{}", report.summary());
    println!("all gates pass: {}", report.passed());
    Ok(())
}
