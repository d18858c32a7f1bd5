//! Generalized G-functions
//!
//! ```text
//! G_{a,b,c}(d, t) = sum_j d^j Gamma(c+j) / (Gamma(c) j!) * t^((c+j)a - b - 1) / Gamma((c+j)a - b)
//! ```
//!
//! the inverse Laplace transform of q^b / (q^a - d)^c when ac - b > 0.

use super::gamma::{ln_gamma, ln_pochhammer_ratio, reciprocal_gamma};
use super::sum::KahanSum;
use crate::error::{Error, Result};

/// Hard cap on the number of series terms.
pub const MAX_TERMS: usize = 10_000;

/// Above this ratio of largest term to result, fewer than ~4 significant
/// digits survive in double precision.
pub const CANCELLATION_LIMIT: f64 = 1e12;

/// One instance G_{a,b,c}(d, t).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GFunctionParams {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    pub t: f64,
}

impl GFunctionParams {
    pub fn new(a: f64, b: f64, c: f64, d: f64, t: f64) -> Self {
        GFunctionParams { a, b, c, d, t }
    }

    /// Power of t carried by the leading (j = 0) term.
    pub fn leading_exponent(&self) -> f64 {
        self.c * self.a - self.b - 1.0
    }

    fn validate(&self) -> Result<()> {
        if !(self.c > 0.0) {
            return Err(Error::invalid("c", format!("series order must be positive, got {}", self.c)));
        }
        if !(self.a >= 0.0) {
            return Err(Error::invalid("a", format!("exponent must be nonnegative, got {}", self.a)));
        }
        if !(self.a * self.c - self.b > 0.0) {
            return Err(Error::ConvergenceCondition {
                a: self.a,
                b: self.b,
                c: self.c,
            });
        }
        if self.a == 0.0 && !(self.d < 1.0) {
            return Err(Error::invalid("d", "a = 0 requires d < 1"));
        }
        if !(self.t >= 0.0 && self.t.is_finite()) {
            return Err(Error::invalid("t", format!("time must be finite and nonnegative, got {}", self.t)));
        }
        Ok(())
    }
}

/// Value of a G-function together with its cancellation indicator
/// (largest |term| divided by |value|).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GValue {
    pub value: f64,
    pub cancellation: f64,
    pub terms: usize,
}

/// Evaluates G_{a,b,c}(d, t) by its power series.
///
/// The series stops once three consecutive terms are below `tol` relative to
/// the partial sum with non-increasing magnitudes. Two degenerate cases are
/// summed in closed form: for a = 0 every term carries the same power of t
/// and the j-sum is the binomial series (1 - d)^(-c); for a = 1, b = 0 the
/// series is t^(c-1) e^(d t) / Gamma(c).
pub fn g_function(p: &GFunctionParams, tol: f64) -> Result<GValue> {
    if !(tol > 0.0 && tol <= 1e-3) {
        return Err(Error::invalid("tol", format!("tolerance must lie in (0, 1e-3], got {tol}")));
    }
    p.validate()?;
    let series = GSeries::new(p.a, p.b, p.c, p.d, p.t, tol, MAX_TERMS)?;
    if series.cancellation() > CANCELLATION_LIMIT {
        return Err(Error::Cancellation {
            indicator: series.cancellation(),
        });
    }
    Ok(GValue {
        value: series.value_at_max(),
        cancellation: series.cancellation(),
        terms: series.terms.len(),
    })
}

/// Precomputed G-function series on 0 <= s <= t_max.
///
/// Terms are stored already evaluated at `t_max`, so evaluation at s only
/// scales them by powers of s / t_max <= 1 and never overflows where the
/// value at t_max is finite.
#[derive(Debug, Clone)]
pub(crate) struct GSeries {
    a: f64,
    /// Some((c, d)) when the series is t^(c-1) e^(d t) / Gamma(c).
    exponential: Option<(f64, f64)>,
    exp0: f64,
    t_max: f64,
    terms: Vec<f64>,
    value: f64,
    max_term: f64,
}

impl GSeries {
    pub(crate) fn new(a: f64, b: f64, c: f64, d: f64, t_max: f64, tol: f64, max_terms: usize) -> Result<Self> {
        let exp0 = c * a - b - 1.0;
        if t_max == 0.0 {
            let value = if exp0 > 0.0 {
                0.0
            } else if exp0 == 0.0 {
                let lead = reciprocal_gamma(c * a - b);
                if a == 0.0 {
                    lead * (1.0 - d).powf(-c)
                } else {
                    lead
                }
            } else {
                f64::INFINITY
            };
            return Ok(GSeries {
                a,
                exponential: None,
                exp0,
                t_max,
                terms: vec![value],
                value,
                max_term: value.abs(),
            });
        }
        if a == 0.0 {
            let value = (1.0 - d).powf(-c) * t_max.powf(exp0) * reciprocal_gamma(-b);
            return Ok(GSeries {
                a,
                exponential: None,
                exp0,
                t_max,
                terms: vec![value],
                value,
                max_term: value.abs(),
            });
        }
        if a == 1.0 && b == 0.0 {
            let value = exponential_form(c, d, t_max);
            return Ok(GSeries {
                a,
                exponential: Some((c, d)),
                exp0,
                t_max,
                terms: vec![value],
                value,
                max_term: value.abs(),
            });
        }
        let ln_t = t_max.ln();
        let ln_d = d.abs().ln();
        let mut terms = Vec::new();
        let mut sum = KahanSum::new();
        let mut max_term = 0.0_f64;
        let mut ln_coeff = 0.0; // ln Gamma(c+j)/(Gamma(c) j!)
        for j in 0..max_terms {
            if j > 0 {
                ln_coeff += ((c + j as f64 - 1.0) / j as f64).ln();
            }
            let e = (c + j as f64) * a - b - 1.0;
            let term = if j > 0 && d == 0.0 {
                0.0
            } else {
                let (lg, sg) = ln_gamma(e + 1.0);
                if lg.is_infinite() {
                    0.0
                } else {
                    let ln_mag = ln_coeff + j as f64 * if j > 0 { ln_d } else { 0.0 } + e * ln_t - lg;
                    let sign = if d < 0.0 && j % 2 == 1 { -sg } else { sg };
                    sign * ln_mag.exp()
                }
            };
            if !term.is_finite() {
                return Err(Error::Cancellation {
                    indicator: f64::INFINITY,
                });
            }
            terms.push(term);
            sum.add(term);
            max_term = max_term.max(term.abs());
            let n = terms.len();
            if n >= 3 {
                let s = sum.value().abs();
                let (t0, t1, t2) = (terms[n - 3].abs(), terms[n - 2].abs(), terms[n - 1].abs());
                let small = t0 <= tol * s && t1 <= tol * s && t2 <= tol * s;
                if small && t2 <= t1 && t1 <= t0 {
                    let value = sum.value();
                    return Ok(GSeries {
                        a,
                        exponential: None,
                        exp0,
                        t_max,
                        terms,
                        value,
                        max_term,
                    });
                }
            }
        }
        Err(Error::NonConvergence { terms: max_terms })
    }

    pub(crate) fn value_at_max(&self) -> f64 {
        self.value
    }

    pub(crate) fn cancellation(&self) -> f64 {
        if self.max_term == 0.0 {
            1.0
        } else if self.value == 0.0 {
            f64::INFINITY
        } else {
            self.max_term / self.value.abs()
        }
    }

    /// G(s) for 0 <= s <= t_max.
    pub(crate) fn eval(&self, s: f64) -> f64 {
        if s == self.t_max {
            return self.value;
        }
        if s == 0.0 {
            return if self.exp0 > 0.0 {
                0.0
            } else if self.exp0 == 0.0 {
                self.terms[0]
            } else {
                f64::INFINITY
            };
        }
        if let Some((c, d)) = self.exponential {
            return exponential_form(c, d, s);
        }
        let ratio = s / self.t_max;
        let u = ratio.powf(self.a);
        let mut acc = KahanSum::new();
        let mut p = ratio.powf(self.exp0);
        for &t in &self.terms {
            acc.add(t * p);
            p *= u;
        }
        acc.value()
    }
}

fn exponential_form(c: f64, d: f64, t: f64) -> f64 {
    ((c - 1.0) * t.ln() + d * t - ln_gamma(c).0).exp()
}

/// ln of Gamma(c+j) / (Gamma(c) j!), exposed for the double sums in the
/// stress solution.
pub fn ln_binomial_weight(c: f64, j: usize) -> f64 {
    ln_pochhammer_ratio(c, j)
}
