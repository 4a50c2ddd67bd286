use num_integer::Integer;

use crate::arith::{dedekind_sum, jacobi_symbol, mod_inverse_pair};
use crate::unit::{angle, ExactUnit};
use crate::UnitError;

/// Multiplier `χ(h, k)` of the eta transformation
/// `η((h+iz)/k) = √(i/z)·χ(h,k)·η(([−h]_k + i/z)/k)`.
///
/// Evaluated as `e^{−πi/4}·e^{πi(h−[−h]_k)/(12k)}·e^{−πi·s(h,k)}` with the Dedekind sum `s`.
/// `h` need not be reduced mod `k`.
///
/// ```
/// use num_rational::Ratio;
/// let c = unitarith::chi(0, 1).unwrap();
/// assert_eq!(c.angle(), Ratio::new(7, 4));
/// ```
pub fn chi(h: i64, k: i64) -> Result<ExactUnit, UnitError> {
    let (inv, _) = mod_inverse_pair(h, k)?;
    let phase = angle(-1, 4) + angle((h - inv) as i128, 12 * k as i128) - dedekind_sum(h, k);
    Ok(ExactUnit::from_angle(phase))
}

/// Two-branch closed form of `χ(h, k)` via Jacobi symbols.
///
/// Agrees with [`chi`] for odd `k` and for `k ≡ 0 mod 4`; for `k ≡ 2 mod 4` it
/// can differ and is kept only for comparison.
pub fn chi_branch_formula(h: i64, k: i64) -> Result<ExactUnit, UnitError> {
    if h.gcd(&k) != 1 {
        return Err(UnitError::NotCoprime { h, k });
    }
    let (inv, beta) = mod_inverse_pair(h, k)?;
    let (h, k, inv, beta) = (h as i128, k as i128, inv as i128, beta as i128);
    if k % 2 == 1 {
        let j = jacobi_symbol(h as i64, k as i64);
        let phase = angle(-k, 4) + angle(-beta * inv * (1 - k * k) + k * (h - inv), 12);
        Ok(ExactUnit::sign(j < 0) * ExactUnit::from_angle(phase))
    } else {
        let j = jacobi_symbol(k as i64, h as i64);
        let phase = angle(-1, 4) + angle(h * k * (1 - inv * inv) - inv * (beta - k + 3), 12);
        Ok(ExactUnit::sign(j < 0) * ExactUnit::from_angle(phase))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn branch_formula_agrees_off_twice_odd_moduli() {
        for k in 1..60i64 {
            if k % 4 == 2 {
                continue;
            }
            for h in 0..k {
                if h.gcd(&k) == 1 {
                    assert_eq!(chi(h, k).unwrap(), chi_branch_formula(h, k).unwrap(), "h={h} k={k}");
                }
            }
        }
    }

    #[test]
    fn rejects_both_even() {
        assert!(chi_branch_formula(2, 4).is_err());
        assert!(chi(2, 4).is_err());
    }
}
