//! Main-term asymptotics for the moments `m_T^r(n)`.
//!
//! [`theorem_a_main`] assembles the Bessel-function main term with its Mordell
//! correction in MPFR precision, [`theorem_b_leading`] gives the leading
//! exponential term, [`prop56_expansion_check`] compares the generating function
//! near a root of unity with its expansion, and [`garvan_scan`] checks the
//! inequality between consecutive `T` exactly.

mod convert;
mod expansion;
mod scan;
mod theorem_a;
mod theorem_b;

pub use mpfloat::DEFAULT_PREC;

/// Working precision (bits) for [`theorem_a_main`] used by the CLI and tests.
pub const THEOREM_A_PREC: u32 = 192;
pub use expansion::{prop56_expansion_check, series_length, Prop56Report};
pub use scan::{comparison_rows, garvan_scan, ComparisonRow, GarvanReport};
pub use theorem_a::{
    mordell_beta, theorem_a_main, MordellTerm, MuTerm, TermBreakdown, IMAG_TOLERANCE,
};
pub use theorem_b::{theorem_b_difference_leading, theorem_b_leading};

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AsympError {
    #[error("T = {0} must be odd with 1 ≤ T ≤ 23")]
    InvalidT(u32),
    #[error("r = {0} must be even and at least 2")]
    InvalidR(u32),
    #[error("n must be at least 1")]
    InvalidN,
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("imaginary part {imag:e} is not negligible against real part {real:e}")]
    ImaginaryResidue { real: f64, imag: f64 },
    #[error("{0}")]
    Unconverged(String),
    #[error(transparent)]
    Special(#[from] specfun::SpecError),
    #[error(transparent)]
    Unit(#[from] unitarith::UnitError),
    #[error(transparent)]
    Exact(#[from] qexact::QError),
}

pub(crate) fn check_t(t_mod: u32) -> Result<(), AsympError> {
    if t_mod % 2 == 1 && t_mod < 24 {
        Ok(())
    } else {
        Err(AsympError::InvalidT(t_mod))
    }
}

/// `(T, r, n)` with the Kloosterman cutoff `k_cap = ⌊√n⌋`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AsymptoticQuery {
    pub t_mod: u32,
    pub r: u32,
    pub n: u64,
    pub k_cap: u32,
}

impl AsymptoticQuery {
    pub fn new(t_mod: u32, r: u32, n: u64) -> Result<Self, AsympError> {
        check_t(t_mod)?;
        if r < 2 || r % 2 == 1 {
            return Err(AsympError::InvalidR(r));
        }
        if n == 0 {
            return Err(AsympError::InvalidN);
        }
        Ok(AsymptoticQuery { t_mod, r, n, k_cap: n.isqrt() as u32 })
    }

    /// Same query with a different cutoff.
    pub fn with_k_cap(mut self, k_cap: u32) -> Self {
        self.k_cap = k_cap.max(1);
        self
    }
}
