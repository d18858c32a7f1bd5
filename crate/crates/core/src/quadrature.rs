//! Gauss–Legendre rules and a composite rule on [0, t] graded toward the
//! origin, where the G-function integrands carry fractional powers of s.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::special::KahanSum;

/// Points per panel of the composite rule.
pub const PANEL_ORDER: usize = 10;

/// Gauss–Legendre nodes and weights on [-1, 1].
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    /// n-point rule, nodes found by Newton iteration on P_n.
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "Gauss-Legendre rule needs at least one node");
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let nf = n as f64;
        for i in 0..n.div_ceil(2) {
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, d) = legendre(n, x);
            if d != 0.0 {
                dp = d;
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        GaussLegendre { nodes, weights }
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F, a: f64, b: f64) -> f64 {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        let mut acc = KahanSum::new();
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            acc.add(w * f(mid + half * x));
        }
        half * acc.value()
    }
}

/// P_n(x) and P_n'(x) by the three-term recurrence.
fn legendre(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    if n == 0 {
        return (1.0, 0.0);
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

pub(crate) fn panel_rule() -> &'static GaussLegendre {
    static RULE: OnceLock<GaussLegendre> = OnceLock::new();
    RULE.get_or_init(|| GaussLegendre::new(PANEL_ORDER))
}

/// Geometric grading ratio toward s = 0.
const GRADING: f64 = 0.25;

fn graded_level(f: &dyn Fn(f64) -> f64, t: f64, level: usize) -> f64 {
    let rule = panel_rule();
    let depth = 6 + 3 * level;
    let split = 1usize << level;
    let mut acc = KahanSum::new();
    let mut hi = t;
    for _ in 0..depth {
        let lo = hi * GRADING;
        let h = (hi - lo) / split as f64;
        for p in 0..split {
            let a = lo + p as f64 * h;
            acc.add(rule.integrate(f, a, a + h));
        }
        hi = lo;
    }
    acc.add(rule.integrate(f, 0.0, hi));
    acc.value()
}

/// Integral of `f` over [0, t] on a composite Gauss–Legendre mesh graded
/// geometrically toward 0. Each refinement doubles the panels in every graded
/// interval and deepens the grading, until two successive estimates agree to
/// `tol` relative.
pub fn integrate_graded<F: Fn(f64) -> f64>(f: F, t: f64, tol: f64, max_doublings: usize) -> Result<f64> {
    if t == 0.0 {
        return Ok(0.0);
    }
    let mut prev = graded_level(&f, t, 0);
    for level in 1..=max_doublings {
        let cur = graded_level(&f, t, level);
        if !cur.is_finite() {
            break;
        }
        let diff = (cur - prev).abs();
        if diff <= tol * cur.abs() || diff <= f64::MIN_POSITIVE {
            return Ok(cur);
        }
        prev = cur;
    }
    Err(Error::Quadrature {
        tol,
        doublings: max_doublings,
    })
}
