use num_complex::Complex64;
use num_traits::ToPrimitive;

use crate::{MomentTable, QError};

/// Result of summing a moment generating series at a point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TruncatedSum {
    pub value: Complex64,
    /// `|q0|^{n_max} · |m_T^r(n_max)|`, the size of the last retained term.
    pub tail_estimate: f64,
}

/// Evaluates `Σ_{n ≤ n_max} m_T^r(n) q0^n` from an exact table.
///
/// Fails when the last retained term exceeds `tol` (absolute), which signals
/// that `n_max` is too small for this `|q0|`.
pub fn moment_generating_eval(
    table: &MomentTable,
    q0: Complex64,
    tol: f64,
) -> Result<TruncatedSum, QError> {
    let radius = q0.norm();
    if radius >= 1.0 {
        return Err(QError::OutsideDisc(radius));
    }
    let n_max = table.n_max();
    let mut value = Complex64::new(0.0, 0.0);
    let mut power = Complex64::new(1.0, 0.0);
    for n in 0..=n_max {
        let c = table.value(n).to_f64().unwrap_or(f64::INFINITY);
        value += power * c;
        power *= q0;
    }
    let last = table.value(n_max).to_f64().unwrap_or(f64::INFINITY).abs();
    let tail_estimate = last * radius.powi(n_max as i32);
    if !(tail_estimate <= tol) {
        return Err(QError::Unconverged {
            tail: tail_estimate,
            tol,
        });
    }
    Ok(TruncatedSum {
        value,
        tail_estimate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moment_table;

    #[test]
    fn origin_returns_constant_term() {
        let t = moment_table(1, 0, 10).unwrap();
        let s = moment_generating_eval(&t, Complex64::new(0.0, 0.0), 1e-12).unwrap();
        assert_eq!(s.value, Complex64::new(1.0, 0.0));
    }

    #[test]
    fn short_tables_are_flagged() {
        let t = moment_table(1, 2, 5).unwrap();
        let err = moment_generating_eval(&t, Complex64::new(0.9, 0.0), 1e-12).unwrap_err();
        assert!(matches!(err, QError::Unconverged { .. }));
    }

    #[test]
    fn rejects_points_outside_disc() {
        let t = moment_table(1, 2, 5).unwrap();
        let err = moment_generating_eval(&t, Complex64::new(1.0, 0.0), 1e-12).unwrap_err();
        assert_eq!(err, QError::OutsideDisc(1.0));
    }
}
