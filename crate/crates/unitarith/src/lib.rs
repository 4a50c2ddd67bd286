//! Exact roots of unity for the modular transformation laws.
//!
//! Every phase is an exact rational multiple of π reduced mod 2. Conversion to
//! floating point happens once per summand, in [`ExactUnit::to_complex`] or
//! by the caller at higher precision from [`ExactUnit::angle`].

mod arith;
mod chi;
mod factors;
mod kloosterman;
mod unit;

pub use arith::{alpha, dedekind_sum, jacobi_symbol, mod_inverse_pair, rho_t};
pub use chi::{chi, chi_branch_formula};
pub use factors::{
    gamma_split, u_h, u_h_star, u_mu, u_theta, u_theta_star, TransformContext, UnitFactors,
};
pub use kloosterman::{kloosterman_k, kloosterman_partial, KloostermanValue};
pub use unit::{reduce_mod_two, Angle, ExactUnit, ScaledUnit};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum UnitError {
    #[error("h = {h} and k = {k} are not coprime with k ≥ 1")]
    NotCoprime { h: i64, k: i64 },
    #[error("T must be an odd positive integer, got {0}")]
    InvalidT(i64),
    #[error("shift t = {t} outside [−(T−1)/2, (T−1)/2] for T = {t_mod}")]
    TOutOfRange { t: i64, t_mod: i64 },
    #[error("l = {l} outside [0, {k})")]
    LOutOfRange { l: i64, k: i64 },
    #[error("this unit factor needs a nonzero shift t")]
    ZeroShift,
}
