//! Special functions for the asymptotic layers.
//!
//! Double-precision routines cover half-integer Bessel `I`, the Gaussian error
//! function, Mordell-type line integrals and the Bessel-weighted integral on
//! `[−1, 1]`. The [`mp`] module repeats the Bessel pieces in MPFR precision.
//! Expansion coefficients and Bernoulli values are exact rationals.

mod bernoulli;
mod bessel;
mod integrals;
mod kappa;
pub mod mp;

pub use bernoulli::{bernoulli_half, bernoulli_numbers};
pub use bessel::{bessel_i, bessel_k_half, MAX_TWICE_ORDER};
pub use integrals::{
    bessel_g, bessel_integral_i, gauss_error_e, gauss_error_ec, gauss_legendre_converged, mordell_h, script_h,
    IntegralParams,
};
pub use kappa::{
    cauchy_coefficients, kappa, kappa_h, taylor_identity_check, ExpansionCoefficients, Family,
    KappaValue,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpecError {
    #[error("half-integer order 2ν = {0} is outside the supported band")]
    UnsupportedOrder(i32),
    #[error("argument must be positive and finite, got {0}")]
    NonPositiveArgument(f64),
    #[error("integrand does not decay along the real line")]
    NonDecaying,
    #[error("parameter outside the domain: {0}")]
    Domain(String),
    #[error("numerical refinement did not converge: {0}")]
    Unconverged(String),
}
