use num_complex::Complex64;
use num_integer::Integer;

use crate::arith::{mod_inverse_pair, rho_t};
use crate::chi::chi;
use crate::factors::{gamma_split, u_h_star};
use crate::unit::{angle, ExactUnit, ScaledUnit};
use crate::UnitError;

/// A Kloosterman-type sum with its exact summands retained.
#[derive(Clone, Debug, PartialEq)]
pub struct KloostermanValue {
    pub k: i64,
    pub n: i64,
    pub value: Complex64,
    /// `(h, summand)` pairs; the summands are exact until converted.
    pub terms: Vec<(i64, ScaledUnit)>,
}

impl KloostermanValue {
    fn from_terms(k: i64, n: i64, terms: Vec<(i64, ScaledUnit)>) -> Self {
        let value = terms.iter().map(|(_, u)| u.to_complex()).sum();
        KloostermanValue { k, n, value, terms }
    }
}

fn twist(n: i64, h: i64, k: i64) -> ExactUnit {
    let e = (n as i128 * h as i128).rem_euclid(k as i128);
    ExactUnit::from_angle(angle(-2 * e, k as i128))
}

/// `K_k(n) = −i^{3/2} Σ_{h mod k, (h,k)=1} e^{−2πinh/k}·e^{πi(h−[−h]_k)/(12k)}/χ(h,k)`.
///
/// ```
/// let v = unitarith::kloosterman_k(1, 17);
/// assert!((v.value.re - 1.0).abs() < 1e-15 && v.value.im.abs() < 1e-15);
/// ```
///
/// # Panics
/// Panics if `k < 1`.
pub fn kloosterman_k(k: i64, n: i64) -> KloostermanValue {
    assert!(k >= 1, "modulus must be positive");
    let lead = ExactUnit::from_angle(angle(1, 1) + angle(3, 4));
    let terms = (0..k)
        .filter(|h| h.gcd(&k) == 1)
        .map(|h| {
            let (inv, _) = mod_inverse_pair(h, k).expect("coprime by filter");
            let phase = ExactUnit::from_angle(angle((h - inv) as i128, 12 * k as i128));
            let chi = chi(h, k).expect("coprime by filter");
            (h, ScaledUnit::unimodular(lead * twist(n, h, k) * phase * chi.inv()))
        })
        .collect();
    KloostermanValue::from_terms(k, n, terms)
}

/// Partial sum over `h` coprime to `k` with `ρ_T(t·γ_Co·h) = ϱ` of `e^{−2πinh/k}·U_H*(T,t,l,h,k)`.
pub fn kloosterman_partial(
    t_mod: i64,
    t: i64,
    varrho: i64,
    l: i64,
    k: i64,
    n: i64,
) -> Result<KloostermanValue, UnitError> {
    if k < 1 {
        return Err(UnitError::NotCoprime { h: 0, k });
    }
    let (_, gc, _) = gamma_split(t_mod, k);
    let mut terms = Vec::new();
    for h in (0..k).filter(|h| h.gcd(&k) == 1) {
        if rho_t(t_mod, t * gc * h) != varrho {
            continue;
        }
        let u = u_h_star(t_mod, t, l, h, k)?;
        terms.push((h, u.times_unit(twist(n, h, k))));
    }
    Ok(KloostermanValue::from_terms(k, n, terms))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k_two_single_term() {
        let v = kloosterman_k(2, 0);
        assert_eq!(v.terms.len(), 1);
    }

    #[test]
    fn empty_partial_sum_is_zero() {
        // T = 5, k = 5: γ_Co = 1 and t·h runs over residues coprime to 5, so ϱ = 0 never occurs
        let v = kloosterman_partial(5, 1, 0, 0, 5, 3).unwrap();
        assert!(v.terms.is_empty());
        assert_eq!(v.value, Complex64::new(0.0, 0.0));
    }
}
