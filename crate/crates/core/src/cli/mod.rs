//! Command-line layer: configuration, CSV output and cross-checks.

mod compare;
mod config;
mod profile;

pub use compare::{relative_deviation, run_compare, CompareReport, CompareRow, PairSummary, COMPARE_HEADER, SERIES_FD_TOL, SERIES_ORACLE_TOL};
pub use config::{parse_config, CompareFlags, RunConfig, DEFAULT_FD_DT, DEFAULT_FD_NR};
pub use profile::{run_profile, ProfileRow, ProfileTable, PROFILE_HEADER};

use crate::error::{Error, Result};
use crate::special::bessel_j1_zeros;

/// Environment variable capping the worker thread count.
pub const THREADS_ENV: &str = "FRACFLOW_THREADS";

/// Scientific notation with 17 significant digits, which round-trips every f64.
pub fn format_float(v: f64) -> String {
    format!("{v:.16e}")
}

pub(crate) fn parse_float(s: &str) -> Option<f64> {
    s.parse().ok()
}

/// `n,zero,argument,j2_wall` table of the first `count` positive zeros r_n
/// of J1(R r), with argument R r_n and J2(R r_n).
pub fn zeros_table(radius: f64, count: usize) -> Result<String> {
    if count == 0 {
        return Err(Error::invalid("count", "need at least one zero"));
    }
    let basis = bessel_j1_zeros(radius, count)?;
    let mut out = String::from("n,zero,argument,j2_wall\n");
    for (n, (&z, &w)) in basis.zeros().iter().zip(basis.weights()).enumerate() {
        out.push_str(&format!("{},{},{},{}\n", n + 1, format_float(z), format_float(radius * z), format_float(w)));
    }
    Ok(out)
}

/// Sizes the global worker pool from `FRACFLOW_THREADS` when it is set.
/// Returns the number of threads in use.
pub fn configure_threads() -> Result<usize> {
    if let Ok(v) = std::env::var(THREADS_ENV) {
        let n: usize = v
            .trim()
            .parse()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| Error::invalid("FRACFLOW_THREADS", format!("expected a positive integer, got `{v}`")))?;
        // a pool that already exists keeps its size
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    Ok(rayon::current_num_threads())
}
