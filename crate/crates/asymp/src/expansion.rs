use std::f64::consts::PI;

use mpfloat::rug::ops::Pow;
use mpfloat::rug::Float;
use mpfloat::{pi, MpComplex};
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::Ratio;
use serde::Serialize;
use specfun::{kappa, kappa_h, script_h};
use unitarith::{alpha, chi, mod_inverse_pair, rho_t, u_h_star, ExactUnit};

use crate::convert::{big, complex, half_power, kappa_value, scaled_unit};
use crate::theorem_a::{mordell_triples, mu_triples};
use crate::{check_t, AsympError};

/// Nats by which the last retained exact-series term must undercut the first.
const TAIL_NATS: f64 = 90.0;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Prop56Report {
    pub t_mod: u32,
    pub r: u32,
    pub h: i64,
    pub k: i64,
    pub z: [f64; 2],
    pub n_max: usize,
    pub exact: [f64; 2],
    pub mu_summand: [f64; 2],
    pub mordell_summand: [f64; 2],
    /// `|exact − (μ-summand + Mordell summands)|`
    pub discrepancy: f64,
    /// `|exact − μ-summand|`
    pub discrepancy_without_mordell: f64,
    /// `k^{r/2}|z|^{−r+1/2}`, the shape of the error bound.
    pub envelope: f64,
}

/// Smallest `N` with `aN − π√(2N/3) − r·ln(N+1) ≥ TAIL_NATS`, `a = −ln|q|`.
pub fn series_length(r: u32, log_abs_q: f64) -> usize {
    let a = -log_abs_q;
    let mut n = 20usize;
    while a * n as f64 - PI * (2.0 * n as f64 / 3.0).sqrt() - r as f64 * ((n + 1) as f64).ln() < TAIL_NATS {
        n += 10;
    }
    n
}

/// Compares the exact generating function `Σ m_T^r(n) qⁿ` at `q = e^{2πi(h+iz)/k}` against
/// its main-term expansion.
pub fn prop56_expansion_check(
    t_mod: u32,
    r: u32,
    h: i64,
    k: i64,
    z: Complex64,
    n_max: Option<usize>,
    prec: u32,
) -> Result<Prop56Report, AsympError> {
    check_t(t_mod)?;
    if r % 2 == 1 {
        return Err(AsympError::InvalidR(r));
    }
    if k < 1 || h < 0 || h >= k || h.gcd(&k) != 1 {
        return Err(AsympError::Hypothesis(format!("(h, k) = ({h}, {k}) not reduced")));
    }
    if z.re <= 0.0 || z.inv().re < k as f64 / 2.0 {
        return Err(AsympError::Hypothesis(format!("Re(1/z) = {} below k/2", z.inv().re)));
    }
    let log_abs_q = -2.0 * PI * z.re / k as f64;
    let n_max = n_max.unwrap_or_else(|| series_length(r, log_abs_q));
    if n_max > 20_000 {
        return Err(AsympError::Unconverged(format!("exact series would need {n_max} terms")));
    }

    let exact = exact_series(t_mod, r, h, k, z, n_max, prec)?;
    let mu = mu_summand(t_mod, r, h, k, z, prec)?;
    let mordell = complex(mordell_summand(t_mod, r, h, k, z)?, prec);
    let diff_mu = &exact - &mu;
    let diff = &diff_mu - &mordell;
    let pair = |v: &MpComplex| {
        let (a, b) = v.to_f64_pair();
        [a, b]
    };
    Ok(Prop56Report {
        t_mod,
        r,
        h,
        k,
        z: [z.re, z.im],
        n_max,
        exact: pair(&exact),
        mu_summand: pair(&mu),
        mordell_summand: pair(&mordell),
        discrepancy: diff.abs().to_f64(),
        discrepancy_without_mordell: diff_mu.abs().to_f64(),
        envelope: (k as f64).powf(r as f64 / 2.0) * z.norm().powf(0.5 - r as f64),
    })
}

fn exact_series(t_mod: u32, r: u32, h: i64, k: i64, z: Complex64, n_max: usize, prec: u32) -> Result<MpComplex, AsympError> {
    let table = qexact::moment_table(t_mod as i64, r, n_max)?;
    // q = e^{2πih/k}·e^{−2πz/k}
    let two_pi_k = Float::with_val(prec, pi(prec) * 2u32) / k;
    let zc = complex(z, prec);
    let log_q = MpComplex::new(
        Float::with_val(prec, &zc.re * &two_pi_k) * -1i32,
        Float::with_val(prec, &two_pi_k * h) - Float::with_val(prec, &zc.im * &two_pi_k),
    );
    let q = log_q.exp();
    let mut power = MpComplex::from_real(Float::with_val(prec, 1));
    let mut sum = MpComplex::zero(prec);
    let mut first = 0.0f64;
    let mut last = 0.0f64;
    for n in 0..=n_max {
        let term = power.scale(&big(table.value(n), prec));
        let size = term.abs().to_f64();
        if first == 0.0 {
            first = size;
        }
        last = size;
        sum += &term;
        power = &power * &q;
    }
    if last > first.max(1.0) * (-TAIL_NATS / 2.0).exp() {
        return Err(AsympError::Unconverged(format!("exact series tail {last:e} at n = {n_max}")));
    }
    Ok(sum)
}

/// `−e^{3πi/4} e^{πi(h−[−h]_k)/(12k)}/χ(h,k) · e^{−π(z−1/z)/(12k)} Σ κ(a,b,c)(kT)^a z^{1/2−a−2c}`
fn mu_summand(t_mod: u32, r: u32, h: i64, k: i64, z: Complex64, prec: u32) -> Result<MpComplex, AsympError> {
    let (inv, _) = mod_inverse_pair(h, k)?;
    let phase = ExactUnit::from_angle(Ratio::new(7, 4) + Ratio::new((h - inv) as i128, 12 * k as i128)) * chi(h, k)?.inv();
    let a = phase.angle();
    let unit = MpComplex::unit(prec, *a.numer(), *a.denom());
    let zc = complex(z, prec);
    let diff = &zc - &zc.recip();
    let scale = Float::with_val(prec, -pi(prec)) / (12 * k);
    let gauss = diff.scale(&scale).exp();
    let mut sum = MpComplex::zero(prec);
    for (a, b, c) in mu_triples(r) {
        let coeff = kappa_value(&kappa(a as i32, b as i32, c as i32), prec)
            * Float::with_val(prec, k * t_mod as i64).pow(a);
        sum += &half_power(&zc, 1 - 2 * a as i32 - 4 * c as i32).scale(&coeff);
    }
    Ok(&(&unit * &gauss) * &sum)
}

/// `Σ_{t≠0} Σ_{l<k_r}` of the Mordell-integral summands.
fn mordell_summand(t_mod: u32, r: u32, h: i64, k: i64, z: Complex64) -> Result<Complex64, AsympError> {
    let tm = t_mod as i64;
    let g = tm.gcd(&k);
    let (gc, kr) = (tm / g, k / g);
    let (tf, kf, gf) = (tm as f64, k as f64, gc as f64);
    let half = (tm - 1) / 2;
    let mut total = Complex64::new(0.0, 0.0);
    for t in (-half..=half).filter(|&t| t != 0) {
        let rho = rho_t(tm, t * gc * h);
        let rf = rho as f64;
        let quad = rf * rf + tf * tf / 4.0 - rf.abs() * tf;
        let pre = gf.powf(-1.5)
            * (tf / kf).sqrt()
            * (-PI * z / (12.0 * kf) - PI / (gf * gf * tf * kf * z) * quad + PI / (12.0 * kf * z)).exp();
        for l in 0..kr {
            let a_l = alpha(tm, t, l, kr)?;
            let al = *a_l.numer() as f64 / *a_l.denom() as f64;
            let unit = scaled_unit(&u_h_star(tm, t, l, h, k)?, 64).to_f64_pair();
            let mut s = Complex64::new(0.0, 0.0);
            for (a, b, c) in mordell_triples(r) {
                let kap = kappa_h(a as i32, b as i32, c as i32).to_f64();
                let hv = script_h(c, t_mod, al, gf, rf / tf, k as u32, z, 1e-14)?;
                s += kap
                    * z.powf(-0.5 - a as f64 - c as f64)
                    * (kf * tf).powi(a as i32)
                    * (tf / gf).powi(c as i32)
                    * hv;
            }
            total += pre * Complex64::new(unit.0, unit.1) * s;
        }
    }
    Ok(total)
}
