//! Theta functions, Appell–Lerch sums and the moment kernels built from them.
//!
//! Functions suffixed `_tau` take a point `τ` of the upper half plane; the
//! unsuffixed ones take `z` with `Re z > 0` and evaluate at `τ = iz`.
//! [`verify_transformation`] checks each transformation law numerically.

mod appell;
mod jacobi;
mod kernels;
pub mod laws;
mod series;
mod verify;

pub use appell::{mordell, mu, mu_hat, r_function, zwegers_a, zwegers_a_t, THETA_FLOOR};
pub use jacobi::{eta, eta_tau, theta, theta_product, theta_product_tau, theta_tau};
pub use kernels::{
    c_kernel, c_kernel_eta_quotient, moment_kernel, moment_kernel_appell, taylor_moments,
};
pub use series::lattice_distance;
pub use verify::{verify_transformation, verify_transformation_seeded, Case, Failure, Report, DEFAULT_SEED};

use num_complex::Complex64;
use num_integer::Integer;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum MockError {
    #[error("Im τ = {0} is not positive")]
    NotInUpperHalfPlane(f64),
    #[error("Re z = {0} is not positive")]
    NonPositiveRealPart(f64),
    #[error("argument too close to the singular lattice: {0}")]
    NearLattice(String),
    #[error("series did not converge: {0}")]
    Unconverged(String),
    #[error("the two forms of the t = 0 kernel disagree (relative {0:e})")]
    DualFormMismatch(f64),
    #[error("shift t = {t} invalid for T = {t_mod}")]
    InvalidShift { t_mod: u32, t: i64 },
    #[error("{0}")]
    Domain(String),
    #[error(transparent)]
    Special(#[from] specfun::SpecError),
    #[error(transparent)]
    Unit(#[from] unitarith::UnitError),
}

/// `(u, v, z, h, k)` with `τ = (h + iz)/k`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EvaluationPoint {
    pub u: Complex64,
    pub v: Complex64,
    pub z: Complex64,
    pub h: i64,
    pub k: i64,
}

impl EvaluationPoint {
    /// Checks `Re z > 0`, `gcd(h,k) = 1`, `0 ≤ h < k`; with `usual`, also `|z| < 1`,
    /// and with `arc`, `Re(1/z) ≥ k/2`.
    pub fn validate(&self, usual: bool, arc: bool) -> Result<(), MockError> {
        if self.z.re <= 0.0 {
            return Err(MockError::NonPositiveRealPart(self.z.re));
        }
        if self.k < 1 || self.h < 0 || self.h >= self.k || self.h.gcd(&self.k) != 1 {
            return Err(MockError::Domain(format!("(h, k) = ({}, {}) not reduced", self.h, self.k)));
        }
        if usual && self.z.norm() >= 1.0 {
            return Err(MockError::Domain("|z| must be below 1".into()));
        }
        if arc && self.z.inv().re < self.k as f64 / 2.0 {
            return Err(MockError::Domain("Re(1/z) below k/2".into()));
        }
        Ok(())
    }

    pub fn tau(&self) -> Complex64 {
        (Complex64::new(self.h as f64, 0.0) + Complex64::i() * self.z) / self.k as f64
    }

    /// `q = e^{2πiτ}`
    pub fn q(&self) -> Complex64 {
        (2.0 * std::f64::consts::PI * Complex64::i() * self.tau()).exp()
    }
}
