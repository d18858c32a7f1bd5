//! `profile`: velocity and stress on the sample grid as CSV.

use crate::analytic::{shear_field, velocity_field};
use crate::error::{Error, Result};
use crate::modal::Method;
use crate::special::bessel_j1_zeros;

use super::config::RunConfig;
use super::{format_float, parse_float};

pub const PROFILE_HEADER: &str = "r,t,velocity,stress,method,cancellation";

#[derive(Debug, Clone, PartialEq)]
pub struct ProfileRow {
    pub r: f64,
    pub t: f64,
    pub velocity: f64,
    pub stress: f64,
    pub method: Method,
    pub cancellation: f64,
}

/// Rows ordered by radius, then time.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ProfileTable {
    pub rows: Vec<ProfileRow>,
}

impl ProfileTable {
    pub fn to_csv(&self) -> String {
        let mut out = String::with_capacity(64 * (self.rows.len() + 1));
        out.push_str(PROFILE_HEADER);
        out.push('\n');
        for row in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                format_float(row.r),
                format_float(row.t),
                format_float(row.velocity),
                format_float(row.stress),
                row.method,
                format_float(row.cancellation)
            ));
        }
        out
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate();
        match lines.next() {
            Some((_, h)) if h == PROFILE_HEADER => {}
            _ => return Err(Error::Config { line: 1, message: format!("expected header `{PROFILE_HEADER}`") }),
        }
        let rows = lines
            .filter(|(_, l)| !l.is_empty())
            .map(|(i, l)| {
                let bad = |m: &str| Error::Config { line: i + 1, message: m.to_string() };
                let f: Vec<&str> = l.split(',').collect();
                if f.len() != 6 {
                    return Err(bad("expected 6 fields"));
                }
                let num = |s: &str| parse_float(s).ok_or_else(|| bad(&format!("bad number `{s}`")));
                Ok(ProfileRow {
                    r: num(f[0])?,
                    t: num(f[1])?,
                    velocity: num(f[2])?,
                    stress: num(f[3])?,
                    method: Method::parse(f[4]).ok_or_else(|| bad(&format!("bad method `{}`", f[4])))?,
                    cancellation: num(f[5])?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ProfileTable { rows })
    }
}

/// Evaluates velocity and shear stress at every (r, t) sample.
pub fn run_profile(cfg: &RunConfig) -> Result<ProfileTable> {
    let basis = bessel_j1_zeros(cfg.flow.radius, cfg.flow.n_modes)?;
    let v = velocity_field(&cfg.fluid, &cfg.flow, &basis, &cfg.r_samples, &cfg.t_samples)?;
    let s = shear_field(&cfg.fluid, &cfg.flow, &basis, &cfg.r_samples, &cfg.t_samples)?;
    let mut rows = Vec::with_capacity(cfg.r_samples.len() * cfg.t_samples.len());
    for (i, &r) in cfg.r_samples.iter().enumerate() {
        for (j, &t) in cfg.t_samples.iter().enumerate() {
            let fallback = v.methods[i][j] == Method::OracleFallback || s.methods[i][j] == Method::OracleFallback;
            rows.push(ProfileRow {
                r,
                t,
                velocity: v.values[i][j],
                stress: s.values[i][j],
                method: if fallback { Method::OracleFallback } else { Method::Series },
                cancellation: v.cancellation[i][j].max(s.cancellation[i][j]),
            });
        }
    }
    Ok(ProfileTable { rows })
}
