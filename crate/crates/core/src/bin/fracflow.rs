use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use fracflow::cli::{configure_threads, parse_config, run_compare, run_profile, zeros_table};

#[derive(Parser)]
#[command(name = "fracflow", version, about = "Rotational flow of a fractional second-grade fluid in a cylinder")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Velocity and shear stress on the configured (r, t) samples.
    Profile { config: PathBuf },
    /// Series velocity against the Laplace oracle and/or the FD solver.
    Compare { config: PathBuf },
    /// First N zeros of J1(R r) with J2 at the wall.
    Zeros {
        #[arg(long)]
        radius: f64,
        #[arg(long)]
        count: usize,
    },
}

fn emit(path: Option<&Path>, text: &str) -> Result<(), String> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| format!("{}: {e}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load(path: &Path) -> Result<fracflow::cli::RunConfig, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_config(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn run(cli: Cli) -> Result<bool, String> {
    configure_threads().map_err(|e| e.to_string())?;
    match cli.command {
        Command::Profile { config } => {
            let cfg = load(&config)?;
            let table = run_profile(&cfg).map_err(|e| e.to_string())?;
            emit(cfg.output_path.as_deref(), &table.to_csv())?;
            Ok(true)
        }
        Command::Compare { config } => {
            let cfg = load(&config)?;
            let report = run_compare(&cfg).map_err(|e| e.to_string())?;
            emit(cfg.output_path.as_deref(), &report.to_csv())?;
            eprint!("{}", report.summary());
            Ok(report.passed())
        }
        Command::Zeros { radius, count } => {
            let table = zeros_table(radius, count).map_err(|e| e.to_string())?;
            emit(None, &table)?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
