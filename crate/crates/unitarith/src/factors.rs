use num_integer::Integer;
use num_rational::Ratio;

use crate::arith::{alpha, mod_inverse_pair, rho_t};
use crate::chi::chi;
use crate::unit::{angle, Angle, ExactUnit, ScaledUnit};
use crate::UnitError;

fn check_t_range(t_mod: i64, t: i64) -> Result<(), UnitError> {
    if t_mod < 1 || t_mod % 2 == 0 {
        return Err(UnitError::InvalidT(t_mod));
    }
    if t.abs() > (t_mod - 1) / 2 {
        return Err(UnitError::TOutOfRange { t, t_mod });
    }
    Ok(())
}

/// `(γ_GCD, γ_Co, k/γ_GCD)` for modulus `T` and denominator `k`.
pub fn gamma_split(t_mod: i64, k: i64) -> (i64, i64, i64) {
    let g = t_mod.gcd(&k);
    (g, t_mod / g, k / g)
}

/// Integer data attached to one Farey denominator and one residue shift.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TransformContext {
    pub t_mod: i64,
    pub t: i64,
    pub l: i64,
    pub h: i64,
    pub k: i64,
    pub gamma_gcd: i64,
    pub gamma_co: i64,
    /// `[−h]_k`
    pub inv: i64,
    /// Bezout partner: `−h·inv − bezout_beta·k = 1`.
    pub bezout_beta: i64,
}

impl TransformContext {
    pub fn new(t_mod: i64, t: i64, l: i64, h: i64, k: i64) -> Result<Self, UnitError> {
        check_t_range(t_mod, t)?;
        if h < 0 || h >= k.max(1) {
            return Err(UnitError::NotCoprime { h, k });
        }
        let (inv, bezout_beta) = mod_inverse_pair(h, k)?;
        let (gamma_gcd, gamma_co, k_red) = gamma_split(t_mod, k);
        if l < 0 || l >= k_red {
            return Err(UnitError::LOutOfRange { l, k: k_red });
        }
        Ok(TransformContext {
            t_mod,
            t,
            l,
            h,
            k,
            gamma_gcd,
            gamma_co,
            inv,
            bezout_beta,
        })
    }

    /// `ρ_T(t·γ_Co·h)`
    pub fn rho(&self) -> i64 {
        rho_t(self.t_mod, self.t * self.gamma_co * self.h)
    }

    /// `α_{T,t}(l, k/γ_GCD)`
    pub fn alpha(&self) -> Angle {
        alpha(self.t_mod, self.t, self.l, self.k / self.gamma_gcd).expect("l checked at construction")
    }

    pub fn factors(&self) -> Result<UnitFactors, UnitError> {
        let k_red = self.k / self.gamma_gcd;
        let (u_theta_star, u_h_star) = if self.t == 0 {
            (None, None)
        } else {
            (
                Some(u_theta_star(self.t_mod, self.t, self.h, self.k)?),
                Some(u_h_star(self.t_mod, self.t, self.l, self.h, self.k)?),
            )
        };
        Ok(UnitFactors {
            u_theta: u_theta(self.t_mod, self.t, self.h, self.k)?,
            u_mu: u_mu(self.t_mod, self.t, self.h, self.k)?,
            u_h: u_h(self.t_mod, self.t, self.l, self.gamma_co * self.h, k_red)?,
            u_theta_star,
            u_h_star,
        })
    }
}

/// All unit factors of one [`TransformContext`]; the starred ones need `t ≠ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitFactors {
    pub u_theta: ExactUnit,
    pub u_mu: ExactUnit,
    pub u_h: ExactUnit,
    pub u_theta_star: Option<ScaledUnit>,
    pub u_h_star: Option<ScaledUnit>,
}

/// Unit in the transformation of the theta quotient attached to `t`.
pub fn u_theta(t_mod: i64, t: i64, h: i64, k: i64) -> Result<ExactUnit, UnitError> {
    check_t_range(t_mod, t)?;
    let (_, gc, kr) = gamma_split(t_mod, k);
    let (hc, _) = mod_inverse_pair(gc * h, kr)?;
    let r = rho_t(t_mod, t * gc * h);
    let shifted = (t * gc * h - r) as i128;
    let den = (gc * t_mod * k) as i128;
    let phase = angle(shifted * shifted * hc as i128, den) - angle(2 * (t * r) as i128, den);
    Ok(ExactUnit::sign((shifted / t_mod as i128) % 2 != 0) * ExactUnit::from_angle(phase))
}

/// Unit in the transformation of the Appell part with shift `t`.
pub fn u_mu(t_mod: i64, t: i64, h: i64, k: i64) -> Result<ExactUnit, UnitError> {
    check_t_range(t_mod, t)?;
    let (inv, _) = mod_inverse_pair(h, k)?;
    let r = rho_t(t_mod, t * h);
    let q = ((t * h - r) / t_mod) as i128;
    let (k, tm) = (k as i128, t_mod as i128);
    let phase = angle(-(inv as i128) * q * q, k) + angle(2 * (t * r) as i128, tm * tm * k);
    Ok(chi(h, k as i64)?.pow(-3) * ExactUnit::sign(q % 2 != 0) * ExactUnit::from_angle(phase))
}

/// Unit in the transformation of the Mordell-integral part.
pub fn u_h(t_mod: i64, t: i64, l: i64, h: i64, k: i64) -> Result<ExactUnit, UnitError> {
    check_t_range(t_mod, t)?;
    mod_inverse_pair(h, k)?;
    let a = alpha(t_mod, t, l, k)?;
    let r = rho_t(t_mod, t * h);
    let (h128, k128, tm) = (h as i128, k as i128, t_mod as i128);
    let big_l = Ratio::from_integer(l as i128) - angle(k128 - 1, 2);
    let parity = l as i128 * h128 + (k128 - 1) * (h128 - 1) / 2 + (t * h - r) as i128 + 1;
    let phase = angle(-(h128 * k128 + 1), 4)
        - angle(h128, k128) * big_l * big_l
        - Ratio::from_integer(2)
            * (big_l * (angle(1, 2) - angle(t as i128 * h128, tm * k128)) + angle(r as i128, tm) * a);
    Ok(ExactUnit::sign(parity % 2 != 0) * ExactUnit::from_angle(phase))
}

/// Starred theta unit; carries a real sine factor when `ρ_T(t·γ_Co·h) = 0`.
pub fn u_theta_star(t_mod: i64, t: i64, h: i64, k: i64) -> Result<ScaledUnit, UnitError> {
    check_t_range(t_mod, t)?;
    if t == 0 {
        return Err(UnitError::ZeroShift);
    }
    let (g, gc, kr) = gamma_split(t_mod, k);
    let (hc, _) = mod_inverse_pair(gc * h, kr)?;
    let r = rho_t(t_mod, t * gc * h);
    let base = chi(gc * h, kr)?.pow(3) * u_theta(t_mod, t, h, k)?;
    let (g, gc, hc, h, k, t, r) = (g as i128, gc as i128, hc as i128, h as i128, k as i128, t as i128, r as i128);
    let a = angle(g * hc, 4 * k);
    let b = angle(r * hc, gc * k) - angle(t * (1 + gc * h * hc), gc * k);
    Ok(if r == 0 {
        ScaledUnit {
            unit: base * ExactUnit::from_angle(a),
            sines: vec![angle(t * (1 + gc * h * hc), gc * k)],
        }
    } else if r > 0 {
        ScaledUnit::unimodular(base * ExactUnit::from_angle(a - b - angle(1, 2)))
    } else {
        ScaledUnit::unimodular(base * ExactUnit::from_angle(a + b + angle(1, 2)))
    })
}

/// Composite unit multiplying each Mordell-integral main term.
pub fn u_h_star(t_mod: i64, t: i64, l: i64, h: i64, k: i64) -> Result<ScaledUnit, UnitError> {
    let (_, gc, kr) = gamma_split(t_mod, k);
    let theta_star = u_theta_star(t_mod, t, h, k)?;
    let (inv, _) = mod_inverse_pair(h, k)?;
    let r = rho_t(t_mod, t * gc * h);
    let a = alpha(t_mod, t, l, kr)?;
    let k128 = k as i128;
    let phase = angle(3, 4)
        + Ratio::from_integer(2 * r as i128) * a / Ratio::from_integer(t_mod as i128)
        + angle((h - inv) as i128, 12 * k128);
    let unit = chi(h, k)?.inv() * u_h(t_mod, t, l, gc * h, kr)? * ExactUnit::from_angle(phase);
    Ok(theta_star.times_unit(unit))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn context_bezout_identity() {
        let c = TransformContext::new(5, 2, 0, 3, 10).unwrap();
        assert_eq!(-c.h * c.inv - c.bezout_beta * c.k, 1);
        assert_eq!((c.gamma_gcd, c.gamma_co), (5, 1));
    }

    #[test]
    fn context_rejects_bad_l_and_t() {
        assert!(TransformContext::new(5, 1, 2, 1, 10).is_err());
        assert!(TransformContext::new(5, 3, 0, 1, 2).is_err());
        assert!(TransformContext::new(4, 1, 0, 1, 2).is_err());
    }

    #[test]
    fn starred_units_need_a_shift() {
        assert_eq!(u_theta_star(5, 0, 1, 2), Err(UnitError::ZeroShift));
        let f = TransformContext::new(5, 0, 0, 1, 2).unwrap().factors().unwrap();
        assert!(f.u_h_star.is_none());
    }
}
