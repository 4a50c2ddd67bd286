use num_integer::Integer;
use num_rational::Ratio;

use crate::unit::Angle;
use crate::UnitError;

/// `([−h]_k, β)` with `0 ≤ [−h]_k < k` and `−h·[−h]_k − β·k = 1`.
///
/// `h` may lie outside `[0, k)`; only its residue enters `[−h]_k`.
///
/// ```
/// assert_eq!(unitarith::mod_inverse_pair(1, 5).unwrap(), (4, -1));
/// assert_eq!(unitarith::mod_inverse_pair(0, 1).unwrap(), (0, -1));
/// ```
pub fn mod_inverse_pair(h: i64, k: i64) -> Result<(i64, i64), UnitError> {
    if k < 1 || h.gcd(&k) != 1 {
        return Err(UnitError::NotCoprime { h, k });
    }
    let inv = if k == 1 {
        0
    } else {
        let e = (-h).rem_euclid(k).extended_gcd(&k);
        e.x.rem_euclid(k)
    };
    let num = -(h as i128) * inv as i128 - 1;
    debug_assert_eq!(num % k as i128, 0);
    Ok((inv, (num / k as i128) as i64))
}

/// Jacobi symbol `(a/n)` for odd `n ≥ 1`.
///
/// # Panics
/// Panics if `n` is even or not positive.
pub fn jacobi_symbol(a: i64, n: i64) -> i8 {
    assert!(n > 0 && n % 2 == 1, "Jacobi symbol needs odd positive modulus, got {n}");
    let mut a = a.rem_euclid(n);
    let mut n = n;
    let mut res = 1i8;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if n % 8 == 3 || n % 8 == 5 {
                res = -res;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            res = -res;
        }
        a %= n;
    }
    if n == 1 {
        res
    } else {
        0
    }
}

/// Dedekind sum `s(h, k) = Σ_{r=1}^{k−1} ((r/k))((hr/k))`, exact.
pub fn dedekind_sum(h: i64, k: i64) -> Ratio<i128> {
    let k128 = k as i128;
    let h = h.rem_euclid(k) as i128;
    let mut acc: i128 = 0;
    for r in 1..k128 {
        let y = (h * r) % k128;
        if y == 0 {
            continue;
        }
        acc += (2 * r - k128) * (2 * y - k128);
    }
    Ratio::new(acc, 4 * k128 * k128)
}

/// Representative of `x mod T` in `[−(T−1)/2, (T−1)/2]`.
///
/// ```
/// assert_eq!(unitarith::rho_t(5, 7), 2);
/// assert_eq!(unitarith::rho_t(5, -3), 2);
/// ```
pub fn rho_t(t_mod: i64, x: i64) -> i64 {
    let r = x.rem_euclid(t_mod);
    if r > (t_mod - 1) / 2 {
        r - t_mod
    } else {
        r
    }
}

/// `(−t/T + l − (k−1)/2)/k`.
///
/// ```
/// use num_rational::Ratio;
/// assert_eq!(unitarith::alpha(5, 1, 0, 1).unwrap(), Ratio::new(-1, 5));
/// assert_eq!(unitarith::alpha(3, 1, 1, 2).unwrap(), Ratio::new(1, 12));
/// ```
pub fn alpha(t_mod: i64, t: i64, l: i64, k: i64) -> Result<Angle, UnitError> {
    if l < 0 || l >= k {
        return Err(UnitError::LOutOfRange { l, k });
    }
    let (tm, t, l, k) = (t_mod as i128, t as i128, l as i128, k as i128);
    Ok((Ratio::new(-t, tm) + Ratio::from_integer(l) - Ratio::new(k - 1, 2)) / Ratio::from_integer(k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jacobi_examples() {
        assert_eq!(jacobi_symbol(0, 1), 1);
        assert_eq!(jacobi_symbol(2, 15), 1);
        assert_eq!(jacobi_symbol(2, 3), -1);
        assert_eq!(jacobi_symbol(3, 9), 0);
    }

    #[test]
    fn dedekind_known_values() {
        assert_eq!(dedekind_sum(1, 3), Ratio::new(1, 18));
        assert_eq!(dedekind_sum(1, 5), Ratio::new(1, 5));
        assert_eq!(dedekind_sum(0, 1), Ratio::new(0, 1));
    }

    #[test]
    fn dedekind_reciprocity() {
        for h in 1..30i64 {
            for k in 1..30i64 {
                if h.gcd(&k) != 1 {
                    continue;
                }
                let lhs = dedekind_sum(h, k) + dedekind_sum(k, h);
                let (h, k) = (h as i128, k as i128);
                let rhs = Ratio::new(h * h + k * k + 1, 12 * h * k) - Ratio::new(1, 4);
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn inverse_rejects_common_factor() {
        assert_eq!(mod_inverse_pair(2, 4), Err(UnitError::NotCoprime { h: 2, k: 4 }));
    }
}
