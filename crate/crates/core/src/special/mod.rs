//! Special functions: Gamma, Bessel J0/J1/J2, zeros of J1 and generalized
//! G-functions.

mod bessel;
mod ddouble;
mod gamma;
mod gfunction;
mod sum;
mod zeros;

pub use bessel::{bessel_j, j0, j1, j1_prime, j2, SERIES_LIMIT};
pub use gamma::{gamma, ln_gamma, reciprocal_gamma};
pub use gfunction::{g_function, ln_binomial_weight, GFunctionParams, GValue, CANCELLATION_LIMIT, MAX_TERMS};
pub use sum::{kahan_sum, KahanSum};
pub use zeros::{bessel_j1_zeros, ModeBasis};

pub(crate) use gfunction::GSeries;
