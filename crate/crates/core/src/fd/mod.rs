//! Finite-difference solution of the governing equation
//! dw/dt = (nu + alpha D_t^beta) (d^2/dr^2 + (1/r) d/dr - 1/r^2) w
//! with w(r, 0) = 0, w(0, t) = 0 and w(R, t) = R Omega t.
//!
//! The Riemann–Liouville derivative is discretized with Grünwald–Letnikov
//! weights over the full history. The newest history term and the viscous
//! term are taken implicitly, so each step is one tridiagonal solve:
//!
//! (I - theta L) w^{n+1} = w^n + alpha dt^{1-beta} L H^{n+1},
//! theta = dt (nu + alpha dt^{-beta}),  H^{n+1} = sum_{k>=1} w_k w^{n+1-k}.

mod history;

use crate::error::{Error, Result};
use crate::params::{FlowConfig, FluidParams};
use history::HistorySum;

/// Uniform space-time grid on [0, R] x [0, nt dt].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    nr: usize,
    dt: f64,
    nt: usize,
    radius: f64,
}

impl Grid {
    pub fn new(nr: usize, dt: f64, nt: usize, radius: f64) -> Result<Self> {
        if nr < 16 {
            return Err(Error::invalid("nr", format!("need at least 16 radial points, got {nr}")));
        }
        if !(dt > 0.0 && dt.is_finite()) {
            return Err(Error::invalid("dt", format!("time step must be positive, got {dt}")));
        }
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(Error::invalid("R", format!("radius must be positive, got {radius}")));
        }
        Ok(Grid { nr, dt, nt, radius })
    }

    /// Grid reaching `t_final` with step `dt` (rounded to the nearest step count).
    pub fn until(nr: usize, dt: f64, t_final: f64, radius: f64) -> Result<Self> {
        if !(t_final >= 0.0 && t_final.is_finite()) {
            return Err(Error::invalid("t", format!("final time must be nonnegative, got {t_final}")));
        }
        Grid::new(nr, dt, (t_final / dt).round() as usize, radius)
    }

    pub fn nr(&self) -> usize {
        self.nr
    }

    pub fn dt(&self) -> f64 {
        self.dt
    }

    pub fn nt(&self) -> usize {
        self.nt
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn dr(&self) -> f64 {
        self.radius / (self.nr - 1) as f64
    }

    pub fn r(&self, i: usize) -> f64 {
        if i == self.nr - 1 {
            self.radius
        } else {
            i as f64 * self.dr()
        }
    }

    pub fn t(&self, n: usize) -> f64 {
        n as f64 * self.dt
    }

    pub fn t_final(&self) -> f64 {
        self.t(self.nt)
    }
}

/// Solution w(r_i, t_n) for n = 0..=nt, stored by time level.
#[derive(Debug, Clone, PartialEq)]
pub struct Field {
    grid: Grid,
    values: Vec<f64>,
}

impl Field {
    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn value(&self, i: usize, n: usize) -> f64 {
        self.values[n * self.grid.nr + i]
    }

    /// All radial values at time level n.
    pub fn row(&self, n: usize) -> &[f64] {
        let nr = self.grid.nr;
        &self.values[n * nr..(n + 1) * nr]
    }

    /// Bilinear interpolation; exact at grid nodes.
    pub fn sample(&self, r: f64, t: f64) -> Result<f64> {
        let g = &self.grid;
        if !(r >= 0.0 && r <= g.radius) || !(t >= 0.0 && t <= g.t_final() * (1.0 + 1e-12)) {
            return Err(Error::invalid("r, t", format!("({r}, {t}) lies outside the simulated domain")));
        }
        let (i0, fr) = locate(r / g.dr(), g.nr - 1);
        let (n0, ft) = locate(t / g.dt, g.nt);
        let at = |i: usize, n: usize| self.value(i, n);
        let lo = at(i0, n0) + fr * (at((i0 + 1).min(g.nr - 1), n0) - at(i0, n0));
        if ft == 0.0 {
            return Ok(lo);
        }
        let n1 = (n0 + 1).min(g.nt);
        let hi = at(i0, n1) + fr * (at((i0 + 1).min(g.nr - 1), n1) - at(i0, n1));
        Ok(lo + ft * (hi - lo))
    }
}

fn locate(x: f64, last: usize) -> (usize, f64) {
    let nearest = x.round();
    if (x - nearest).abs() < 1e-9 * x.max(1.0) {
        return ((nearest as usize).min(last), 0.0);
    }
    let i = (x.floor() as usize).min(last);
    (i, if i == last { 0.0 } else { x - i as f64 })
}

/// Grünwald–Letnikov weights w_0..w_{m-1}: w_0 = 1, w_k = w_{k-1} (k - 1 - beta) / k.
pub fn gl_weights(beta: f64, m: usize) -> Vec<f64> {
    let mut w = Vec::with_capacity(m);
    if m == 0 {
        return w;
    }
    w.push(1.0);
    for k in 1..m {
        let prev = w[k - 1];
        w.push(prev * (k as f64 - 1.0 - beta) / k as f64);
    }
    w
}

/// Grünwald–Letnikov derivative of order beta of uniformly sampled values
/// f(0), f(dt), ...: dt^-beta sum_k w_k f(t_{n-k}) at every sample.
pub fn gl_derivative(samples: &[f64], beta: f64, dt: f64) -> Vec<f64> {
    let w = gl_weights(beta, samples.len());
    let scale = dt.powf(-beta);
    (0..samples.len())
        .map(|n| scale * (0..=n).map(|k| w[k] * samples[n - k]).sum::<f64>())
        .collect()
}

/// Second-order central differences of d^2/dr^2 + (1/r) d/dr - 1/r^2 at
/// interior nodes; the two boundary entries are 0.
pub fn radial_operator(row: &[f64], grid: &Grid) -> Vec<f64> {
    let mut out = vec![0.0; row.len()];
    apply_radial(row, grid, &mut out);
    out
}

fn apply_radial(row: &[f64], grid: &Grid, out: &mut [f64]) {
    let dr = grid.dr();
    let nr = row.len();
    out[0] = 0.0;
    out[nr - 1] = 0.0;
    for i in 1..nr - 1 {
        let r = i as f64 * dr;
        out[i] = (row[i + 1] - 2.0 * row[i] + row[i - 1]) / (dr * dr) + (row[i + 1] - row[i - 1]) / (2.0 * dr * r) - row[i] / (r * r);
    }
}

/// LU factors of the interior tridiagonal system I - theta L.
struct Tridiagonal {
    lower: Vec<f64>,
    upper: Vec<f64>,
    pivot: Vec<f64>,
    wall_coupling: f64,
}

impl Tridiagonal {
    fn new(grid: &Grid, theta: f64) -> Self {
        let dr = grid.dr();
        let m = grid.nr - 2;
        let mut lower = vec![0.0; m];
        let mut diag = vec![0.0; m];
        let mut upper = vec![0.0; m];
        for j in 0..m {
            let r = (j + 1) as f64 * dr;
            lower[j] = -theta * (1.0 / (dr * dr) - 1.0 / (2.0 * dr * r));
            diag[j] = 1.0 + theta * (2.0 / (dr * dr) + 1.0 / (r * r));
            upper[j] = -theta * (1.0 / (dr * dr) + 1.0 / (2.0 * dr * r));
        }
        let wall_coupling = upper[m - 1];
        let mut pivot = vec![0.0; m];
        pivot[0] = diag[0];
        for j in 1..m {
            let l = lower[j] / pivot[j - 1];
            lower[j] = l;
            pivot[j] = diag[j] - l * upper[j - 1];
        }
        Tridiagonal { lower, upper, pivot, wall_coupling }
    }

    /// Solves in place for the interior unknowns given the wall value.
    fn solve(&self, rhs: &mut [f64], wall: f64) {
        let m = rhs.len();
        rhs[m - 1] -= self.wall_coupling * wall;
        for j in 1..m {
            rhs[j] -= self.lower[j] * rhs[j - 1];
        }
        rhs[m - 1] /= self.pivot[m - 1];
        for j in (0..m - 1).rev() {
            rhs[j] = (rhs[j] - self.upper[j] * rhs[j + 1]) / self.pivot[j];
        }
    }
}

/// Time-steps the governing equation from rest on `grid`.
///
/// Fails with [`Error::Unstable`] if max |w| exceeds 10^3 R Omega t_final.
pub fn simulate(fp: &FluidParams, fc: &FlowConfig, grid: &Grid) -> Result<Field> {
    if grid.radius != fc.radius {
        return Err(Error::invalid("grid", "grid radius differs from the flow radius"));
    }
    let (nr, nt, dt) = (grid.nr, grid.nt, grid.dt);
    let (nu, alpha, beta) = (fp.nu(), fp.alpha(), fp.beta());
    let mut values = vec![0.0; (nt + 1) * nr];
    let memory = alpha != 0.0;
    let theta = if memory { dt * (nu + alpha * dt.powf(-beta)) } else { dt * nu };
    let memory_scale = alpha * dt.powf(1.0 - beta);
    let system = Tridiagonal::new(grid, theta);
    let mut history = memory.then(|| HistorySum::new(gl_weights(beta, nt + 2), nr));
    let bound = 1e3 * (fc.radius * fc.omega * grid.t_final()).abs();
    let mut h = vec![0.0; nr];
    let mut lh = vec![0.0; nr];
    let mut rhs = vec![0.0; nr - 2];
    for n in 0..nt {
        let (done, rest) = values.split_at_mut((n + 1) * nr);
        let current = &done[n * nr..];
        rhs.copy_from_slice(&current[1..nr - 1]);
        if let Some(hs) = history.as_mut() {
            hs.sum(done, n + 1, &mut h);
            apply_radial(&h, grid, &mut lh);
            for (x, l) in rhs.iter_mut().zip(&lh[1..nr - 1]) {
                *x += memory_scale * l;
            }
        }
        let wall = fc.radius * fc.omega * grid.t(n + 1);
        system.solve(&mut rhs, wall);
        let next = &mut rest[..nr];
        next[0] = 0.0;
        next[1..nr - 1].copy_from_slice(&rhs);
        next[nr - 1] = wall;
        let max_abs = next.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
        if !(max_abs <= bound) {
            return Err(Error::Unstable { step: n + 1, max_abs });
        }
    }
    Ok(Field { grid: *grid, values })
}
