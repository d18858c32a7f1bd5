use std::io;

/// Errors produced by the special-function substrate, the solution
/// evaluators, the numerical oracles and the command-line layer.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("gamma function has a pole at x = {0}")]
    GammaPole(f64),

    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("G-function convergence condition a*c - b > 0 violated (a = {a}, b = {b}, c = {c})")]
    ConvergenceCondition { a: f64, b: f64, c: f64 },

    #[error("series did not converge within {terms} terms")]
    NonConvergence { terms: usize },

    #[error("cancellation indicator {indicator:e} exceeds the double precision limit")]
    Cancellation { indicator: f64 },

    #[error("quadrature did not reach relative tolerance {tol:e} after {doublings} doublings")]
    Quadrature { tol: f64, doublings: usize },

    #[error("could not bracket zero number {n} of J1")]
    Bracket { n: usize },

    #[error("numerical Laplace inversion failed: {0}")]
    Inversion(String),

    #[error("finite-difference solver became unstable at step {step} (max |w| = {max_abs:e})")]
    Unstable { step: usize, max_abs: f64 },

    #[error("neither the series nor the oracle fallback produced a usable value for mode {mode} at t = {t}: {reason}")]
    ParameterRegime { mode: usize, t: f64, reason: String },

    #[error("config line {line}: {message}")]
    Config { line: usize, message: String },

    #[error("at r = {r}, t = {t}: {source}")]
    AtPoint {
        r: f64,
        t: f64,
        #[source]
        source: Box<Error>,
    },

    #[error(transparent)]
    Io(#[from] io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            reason: reason.into(),
        }
    }

    pub(crate) fn at(self, r: f64, t: f64) -> Self {
        Error::AtPoint {
            r,
            t,
            source: Box::new(self),
        }
    }
}
