//! Exact q-series engine.
//!
//! Everything here works over unbounded integers. The tables produced by
//! [`rank_count_table`] and [`moment_table`] are the ground truth the
//! asymptotic layers are checked against.
//!
//! ```
//! use qexact::{moment_table, spt_oracle};
//!
//! let crank = moment_table(1, 2, 10).unwrap();
//! let rank = moment_table(3, 2, 10).unwrap();
//! let diff = crank.value(10) - rank.value(10);
//! assert_eq!(diff, 2u32 * spt_oracle(10).unwrap());
//! ```

mod eval;
mod series;
mod spt;
mod tables;

pub use eval::{moment_generating_eval, TruncatedSum};
pub use series::{euler_series, partition_numbers, partition_series, PowerSeries};
pub use spt::{spt_oracle, SPT_ORACLE_LIMIT};
pub use tables::{moment_table, rank_count_table, MomentTable, RankCountTable};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum QError {
    #[error("T must be an odd positive integer, got {0}")]
    InvalidT(i64),
    #[error("series constant term must be a unit (±1), got {0}")]
    NotUnit(String),
    #[error("truncation orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("n = {n} exceeds the enumeration guard {limit}")]
    TooLarge { n: u64, limit: u64 },
    #[error("n must be at least 1")]
    NonPositive,
    #[error("truncated series did not converge: tail estimate {tail:e} above tolerance {tol:e}")]
    Unconverged { tail: f64, tol: f64 },
    #[error("|q| = {0} is not inside the unit disc")]
    OutsideDisc(f64),
}

pub(crate) fn check_t(t: i64) -> Result<u64, QError> {
    if t <= 0 || t % 2 == 0 {
        Err(QError::InvalidT(t))
    } else {
        Ok(t as u64)
    }
}
