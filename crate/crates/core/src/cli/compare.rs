//! `compare`: series velocity against the Laplace oracle and the FD solver.

use rayon::prelude::*;

use crate::analytic::velocity_field;
use crate::error::Result;
use crate::fd::simulate;
use crate::oracle::velocity_modes_via_inversion;
use crate::special::bessel_j1_zeros;

use super::config::RunConfig;
use super::format_float;

/// Largest accepted relative deviation between series and oracle.
pub const SERIES_ORACLE_TOL: f64 = 1e-3;
/// Largest accepted relative deviation between series and FD solver.
pub const SERIES_FD_TOL: f64 = 2e-2;

pub const COMPARE_HEADER: &str = "r,t,series,oracle,fd,abs_series_oracle,rel_series_oracle,abs_series_fd,rel_series_fd";

/// |a - b| / max(|a|, |b|); zero when both vanish.
pub fn relative_deviation(a: f64, b: f64) -> f64 {
    let scale = a.abs().max(b.abs());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).abs() / scale
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CompareRow {
    pub r: f64,
    pub t: f64,
    pub series: f64,
    pub oracle: Option<f64>,
    pub fd: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PairSummary {
    pub name: &'static str,
    pub points: usize,
    pub max_rel: f64,
    pub median_rel: f64,
    pub tolerance: f64,
}

impl PairSummary {
    pub fn passed(&self) -> bool {
        self.max_rel <= self.tolerance
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CompareReport {
    pub rows: Vec<CompareRow>,
    pub summaries: Vec<PairSummary>,
}

fn optional(v: Option<f64>) -> String {
    v.map(format_float).unwrap_or_default()
}

fn median(mut v: Vec<f64>) -> f64 {
    if v.is_empty() {
        return 0.0;
    }
    v.sort_by(f64::total_cmp);
    let m = v.len() / 2;
    if v.len() % 2 == 0 {
        0.5 * (v[m - 1] + v[m])
    } else {
        v[m]
    }
}

fn summarize(name: &'static str, tolerance: f64, devs: Vec<f64>) -> PairSummary {
    PairSummary {
        name,
        points: devs.len(),
        max_rel: devs.iter().copied().fold(0.0, f64::max),
        median_rel: median(devs),
        tolerance,
    }
}

impl CompareReport {
    /// True when every compared pair is within its tolerance.
    pub fn passed(&self) -> bool {
        self.summaries.iter().all(PairSummary::passed)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from(COMPARE_HEADER);
        out.push('\n');
        for row in &self.rows {
            let dev = |other: Option<f64>| other.map(|o| ((row.series - o).abs(), relative_deviation(row.series, o)));
            let (so, sf) = (dev(row.oracle), dev(row.fd));
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{}\n",
                format_float(row.r),
                format_float(row.t),
                format_float(row.series),
                optional(row.oracle),
                optional(row.fd),
                optional(so.map(|d| d.0)),
                optional(so.map(|d| d.1)),
                optional(sf.map(|d| d.0)),
                optional(sf.map(|d| d.1)),
            ));
        }
        out
    }

    pub fn summary(&self) -> String {
        let mut out = String::from("pair,points,max_rel,median_rel,tolerance,status\n");
        for s in &self.summaries {
            out.push_str(&format!(
                "{},{},{:.3e},{:.3e},{:.0e},{}\n",
                s.name,
                s.points,
                s.max_rel,
                s.median_rel,
                s.tolerance,
                if s.passed() { "pass" } else { "FAIL" }
            ));
        }
        out
    }
}

/// Velocity from the series and from each requested independent stack at
/// every sample. Without any `compare` flag the oracle alone is used. The
/// oracle is undefined at t = 0 and skips those samples.
pub fn run_compare(cfg: &RunConfig) -> Result<CompareReport> {
    let (fp, fc) = (&cfg.fluid, &cfg.flow);
    let use_oracle = cfg.compare.oracle || !cfg.compare.fd;
    let basis = bessel_j1_zeros(fc.radius, fc.n_modes)?;
    let series = velocity_field(fp, fc, &basis, &cfg.r_samples, &cfg.t_samples)?;
    let oracle = if use_oracle {
        cfg.t_samples
            .par_iter()
            .map(|&t| if t > 0.0 { velocity_modes_via_inversion(fp, fc, &basis, t).map(Some) } else { Ok(None) })
            .collect::<Result<Vec<_>>>()?
    } else {
        vec![None; cfg.t_samples.len()]
    };
    let fd = match (cfg.compare.fd, cfg.fd_grid.as_ref()) {
        (true, Some(grid)) => Some(simulate(fp, fc, grid)?),
        _ => None,
    };
    let mut rows = Vec::new();
    for (i, &r) in cfg.r_samples.iter().enumerate() {
        for (j, &t) in cfg.t_samples.iter().enumerate() {
            rows.push(CompareRow {
                r,
                t,
                series: series.values[i][j],
                oracle: oracle[j].as_ref().map(|p| p.eval(&basis, r)),
                fd: fd.as_ref().map(|f| f.sample(r, t)).transpose()?,
            });
        }
    }
    let mut summaries = Vec::new();
    if use_oracle {
        let devs = rows.iter().filter_map(|row| row.oracle.map(|o| relative_deviation(row.series, o))).collect();
        summaries.push(summarize("series-oracle", SERIES_ORACLE_TOL, devs));
    }
    if fd.is_some() {
        let devs = rows.iter().filter_map(|row| row.fd.map(|f| relative_deviation(row.series, f))).collect();
        summaries.push(summarize("series-fd", SERIES_FD_TOL, devs));
    }
    Ok(CompareReport { rows, summaries })
}
