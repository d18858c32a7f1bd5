//! Flat `key=value` run configuration.

use std::path::PathBuf;

use crate::error::{Error, Result};
use crate::fd::Grid;
use crate::params::{FlowConfig, FluidParams};

/// Default FD grid used by `compare` when `fd` is requested.
pub const DEFAULT_FD_NR: usize = 201;
pub const DEFAULT_FD_DT: f64 = 1e-5;

/// Which independent stacks `compare` runs against the series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CompareFlags {
    pub oracle: bool,
    pub fd: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub fluid: FluidParams,
    pub flow: FlowConfig,
    pub r_samples: Vec<f64>,
    pub t_samples: Vec<f64>,
    pub output_path: Option<PathBuf>,
    pub compare: CompareFlags,
    pub fd_grid: Option<Grid>,
}

const KEYS: &[&str] = &[
    "nu", "alpha", "rho", "beta", "R", "Omega", "n_modes", "r_samples", "t_samples", "output", "compare", "fd_nr", "fd_dt",
    "series_tol", "quad_tol", "stehfest_n",
];

fn config_error(line: usize, message: impl Into<String>) -> Error {
    Error::Config {
        line,
        message: message.into(),
    }
}

fn number(line: usize, key: &str, value: &str) -> Result<f64> {
    value
        .parse::<f64>()
        .ok()
        .filter(|v| v.is_finite())
        .ok_or_else(|| config_error(line, format!("`{key}` expects a finite number, got `{value}`")))
}

fn count(line: usize, key: &str, value: &str) -> Result<usize> {
    value
        .parse::<usize>()
        .map_err(|_| config_error(line, format!("`{key}` expects a nonnegative integer, got `{value}`")))
}

fn list(line: usize, key: &str, value: &str) -> Result<Vec<f64>> {
    let items = value
        .split(',')
        .map(|s| number(line, key, s.trim()).map_err(|_| config_error(line, format!("malformed list for `{key}`: `{value}`"))))
        .collect::<Result<Vec<_>>>()?;
    if items.windows(2).any(|w| w[1] < w[0]) {
        return Err(config_error(line, format!("`{key}` must be sorted ascending")));
    }
    Ok(items)
}

fn check_range(line: usize, result: Result<FluidParams>) -> Result<()> {
    result.map(|_| ()).map_err(|e| config_error(line, e.to_string()))
}

#[derive(Default)]
struct Raw {
    nu: Option<f64>,
    alpha: Option<f64>,
    rho: Option<f64>,
    beta: Option<f64>,
    radius: Option<(usize, f64)>,
    omega: Option<f64>,
    n_modes: Option<usize>,
    r_samples: Option<(usize, Vec<f64>)>,
    t_samples: Option<(usize, Vec<f64>)>,
    output: Option<PathBuf>,
    compare: CompareFlags,
    fd_nr: Option<usize>,
    fd_dt: Option<f64>,
    series_tol: Option<f64>,
    quad_tol: Option<f64>,
    stehfest_n: Option<usize>,
}

/// Parses and validates a configuration. Each value is range-checked on its
/// own line, so errors name the offending key and line.
pub fn parse_config(text: &str) -> Result<RunConfig> {
    let mut raw = Raw::default();
    let mut seen: Vec<&str> = Vec::new();
    for (idx, full) in text.lines().enumerate() {
        let line = idx + 1;
        let content = full.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (key, value) = content
            .split_once('=')
            .map(|(k, v)| (k.trim(), v.trim()))
            .ok_or_else(|| config_error(line, format!("expected key=value, got `{content}`")))?;
        let key = KEYS
            .iter()
            .copied()
            .find(|k| *k == key)
            .ok_or_else(|| config_error(line, format!("unknown key `{key}`")))?;
        if seen.contains(&key) {
            return Err(config_error(line, format!("duplicate key `{key}`")));
        }
        seen.push(key);
        match key {
            "nu" => {
                let v = number(line, key, value)?;
                check_range(line, FluidParams::new(v, 0.0, 1.0, 1.0))?;
                raw.nu = Some(v);
            }
            "alpha" => {
                let v = number(line, key, value)?;
                check_range(line, FluidParams::new(1.0, v, 1.0, 1.0))?;
                raw.alpha = Some(v);
            }
            "rho" => {
                let v = number(line, key, value)?;
                check_range(line, FluidParams::new(1.0, 0.0, v, 1.0))?;
                raw.rho = Some(v);
            }
            "beta" => {
                let v = number(line, key, value)?;
                check_range(line, FluidParams::new(1.0, 0.0, 1.0, v))?;
                raw.beta = Some(v);
            }
            "R" => {
                let v = number(line, key, value)?;
                FlowConfig::new(v, 0.0).map_err(|e| config_error(line, e.to_string()))?;
                raw.radius = Some((line, v));
            }
            "Omega" => raw.omega = Some(number(line, key, value)?),
            "n_modes" => {
                let n = count(line, key, value)?;
                if n == 0 {
                    return Err(config_error(line, "`n_modes` must be at least 1"));
                }
                raw.n_modes = Some(n);
            }
            "r_samples" => raw.r_samples = Some((line, list(line, key, value)?)),
            "t_samples" => {
                let t = list(line, key, value)?;
                if t.iter().any(|&v| v < 0.0) {
                    return Err(config_error(line, "`t_samples` must be nonnegative"));
                }
                raw.t_samples = Some((line, t));
            }
            "output" => {
                if value.is_empty() {
                    return Err(config_error(line, "`output` needs a path"));
                }
                raw.output = Some(PathBuf::from(value));
            }
            "compare" => {
                for flag in value.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                    match flag {
                        "oracle" => raw.compare.oracle = true,
                        "fd" => raw.compare.fd = true,
                        other => return Err(config_error(line, format!("unknown compare flag `{other}` (expected oracle, fd)"))),
                    }
                }
            }
            "fd_nr" => raw.fd_nr = Some(count(line, key, value)?),
            "fd_dt" => raw.fd_dt = Some(number(line, key, value)?),
            "series_tol" => raw.series_tol = Some(number(line, key, value)?),
            "quad_tol" => raw.quad_tol = Some(number(line, key, value)?),
            "stehfest_n" => raw.stehfest_n = Some(count(line, key, value)?),
            _ => unreachable!(),
        }
    }
    assemble(raw)
}

fn required<T>(v: Option<T>, key: &'static str) -> Result<T> {
    v.ok_or_else(|| Error::invalid(key, "missing required key"))
}

fn assemble(raw: Raw) -> Result<RunConfig> {
    let fluid = FluidParams::new(
        required(raw.nu, "nu")?,
        required(raw.alpha, "alpha")?,
        required(raw.rho, "rho")?,
        required(raw.beta, "beta")?,
    )?;
    let (_, radius) = required(raw.radius, "R")?;
    let mut flow = FlowConfig::new(radius, required(raw.omega, "Omega")?)?;
    if let Some(n) = raw.n_modes {
        flow.n_modes = n;
    }
    if let Some(v) = raw.series_tol {
        flow.series_tol = v;
    }
    if let Some(v) = raw.quad_tol {
        flow.quad_tol = v;
    }
    if let Some(v) = raw.stehfest_n {
        flow.stehfest_n = v;
    }
    flow.validate()?;
    let (r_line, r_samples) = required(raw.r_samples, "r_samples")?;
    if let Some(r) = r_samples.iter().find(|&&r| !(r >= 0.0 && r <= radius)) {
        return Err(config_error(r_line, format!("radius sample {r} outside [0, {radius}]")));
    }
    let (_, t_samples) = required(raw.t_samples, "t_samples")?;
    let t_max = t_samples.last().copied().unwrap_or(0.0);
    let fd_grid = if raw.compare.fd {
        Some(Grid::until(raw.fd_nr.unwrap_or(DEFAULT_FD_NR), raw.fd_dt.unwrap_or(DEFAULT_FD_DT), t_max, radius)?)
    } else {
        None
    };
    Ok(RunConfig {
        fluid,
        flow,
        r_samples,
        t_samples,
        output_path: raw.output,
        compare: raw.compare,
        fd_grid,
    })
}
