//! Both sides of each transformation law at a single point.

use std::f64::consts::PI;

use num_complex::Complex64;
use num_integer::Integer;
use unitarith::{alpha, chi, mod_inverse_pair, rho_t, u_h, u_mu};

use crate::appell::{mordell, mu, mu_hat, r_function, zwegers_a, zwegers_a_t};
use crate::jacobi::{eta_tau, theta_product_tau, theta_tau};
use crate::kernels::{c_kernel, c_kernel_eta_quotient, moment_kernel, moment_kernel_appell};
use crate::{EvaluationPoint, MockError};

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Left and right side of one identity.
pub type Sides = (Complex64, Complex64);

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn sign(odd: bool) -> f64 {
    if odd {
        -1.0
    } else {
        1.0
    }
}

fn dual_tau(p: &EvaluationPoint) -> Result<Complex64, MockError> {
    let (inv, _) = mod_inverse_pair(p.h, p.k)?;
    Ok((re(inv as f64) + I / p.z) / p.k as f64)
}

fn chi_c(h: i64, k: i64) -> Result<Complex64, MockError> {
    Ok(chi(h, k)?.to_complex())
}

fn check_shift(t_mod: i64, t: i64) -> Result<(), MockError> {
    if t_mod < 1 || t_mod % 2 == 0 || t.abs() > (t_mod - 1) / 2 {
        return Err(MockError::InvalidShift { t_mod: t_mod.max(0) as u32, t });
    }
    Ok(())
}

/// `η((h+iz)/k) = √(i/z) χ(h,k) η((H+i/z)/k)`.
pub fn eta_modular(p: &EvaluationPoint) -> Result<Sides, MockError> {
    let lhs = eta_tau(p.tau())?;
    let rhs = (I / p.z).sqrt() * chi_c(p.h, p.k)? * eta_tau(dual_tau(p)?)?;
    Ok((lhs, rhs))
}

/// `θ(v+1) = −θ(v)`, `θ(−v) = −θ(v)`, `θ(v+nτ) = (−1)ⁿ e^{−πin²τ−2πinv} θ(v)` and series against product.
pub fn theta_elliptic(p: &EvaluationPoint, n: i64) -> Result<Vec<Sides>, MockError> {
    let (v, tau) = (p.v, p.tau());
    let base = theta_tau(v, tau)?;
    let nf = n as f64;
    let shifted = sign(n % 2 != 0) * (-PI * I * nf * nf * tau - 2.0 * PI * I * nf * v).exp() * base;
    Ok(vec![
        (theta_tau(v + 1.0, tau)?, -base),
        (theta_tau(-v, tau)?, -base),
        (theta_tau(v + nf * tau, tau)?, shifted),
        (theta_product_tau(v, tau)?, base),
    ])
}

/// `θ(v; (h+iz)/k) = √(i/z) χ³ e^{−πkv²/z} θ(iv/z; (H+i/z)/k)`, also at `v+1` against `−θ(v)`.
pub fn theta_modular(p: &EvaluationPoint) -> Result<Vec<Sides>, MockError> {
    let c3 = chi_c(p.h, p.k)?.powu(3);
    let tp = dual_tau(p)?;
    let rhs = |v: Complex64| -> Result<Complex64, MockError> {
        Ok((I / p.z).sqrt() * c3 * (-PI * p.k as f64 * v * v / p.z).exp() * theta_tau(I * v / p.z, tp)?)
    };
    let lhs = theta_tau(p.v, p.tau())?;
    Ok(vec![(lhs, rhs(p.v)?), (-lhs, rhs(p.v + 1.0)?)])
}

/// `μ̂(u+mτ+n, v+m'τ+n') = (−1)^{m+n+m'+n'} e^{−πz(m−m')² + 2πi(m−m')(u−v)} μ̂(u, v)` at `τ = iz`.
pub fn muhat_elliptic(p: &EvaluationPoint, shift: [i64; 4]) -> Result<Sides, MockError> {
    let tau = I * p.z;
    let [m, n, m2, n2] = shift;
    let d = (m - m2) as f64;
    let lhs = mu_hat(p.u + m as f64 * tau + n as f64, p.v + m2 as f64 * tau + n2 as f64, tau)?;
    let rhs = sign((m + n + m2 + n2) % 2 != 0)
        * (-PI * p.z * d * d + 2.0 * PI * I * d * (p.u - p.v)).exp()
        * mu_hat(p.u, p.v, tau)?;
    Ok((lhs, rhs))
}

/// `μ̂(−iuz, −ivz; (h+iz)/k) = χ^{−3} √(i/z) e^{−πkz(u−v)²} μ̂(u, v; (H+i/z)/k)`.
pub fn muhat_modular(p: &EvaluationPoint) -> Result<Sides, MockError> {
    let lhs = mu_hat(-I * p.u * p.z, -I * p.v * p.z, p.tau())?;
    let d = p.u - p.v;
    let rhs = chi_c(p.h, p.k)?.powi(-3)
        * (I / p.z).sqrt()
        * (-PI * p.k as f64 * p.z * d * d).exp()
        * mu_hat(p.u, p.v, dual_tau(p)?)?;
    Ok((lhs, rhs))
}

/// `R(w+1; τ) = −R(w; τ)` and `R(w; τ+1) = e^{−πi/4} R(w; τ)` with `w = u`.
pub fn r_props(p: &EvaluationPoint) -> Result<Vec<Sides>, MockError> {
    let (w, tau) = (p.u, p.tau());
    let base = r_function(w, tau)?;
    Ok(vec![
        (r_function(w + 1.0, tau)?, -base),
        (r_function(w, tau + 1.0)?, Complex64::from_polar(1.0, -PI / 4.0) * base),
    ])
}

/// `R(w; iz) = −z^{−1/2} e^{πw²/z} (R(iw/z; i/z) − H(iw/z; i/z))` with `w = u`.
pub fn r_mordell(p: &EvaluationPoint) -> Result<Sides, MockError> {
    let (w, z) = (p.u, p.z);
    let lhs = r_function(w, I * z)?;
    let (w2, t2) = (I * w / z, I / z);
    let rhs = -(PI * w * w / z).exp() / z.sqrt() * (r_function(w2, t2)? - mordell(w2, t2)?);
    Ok((lhs, rhs))
}

/// `R(w; iz/n) = Σ_L e^{πzL²/n} e^{−2πiL(w+1/2)} R(nw + Liz + (n−1)/2; niz)` with `L = l − (n−1)/2`.
pub fn r_dissection(p: &EvaluationPoint, n: u32) -> Result<Sides, MockError> {
    let (w, tau) = (p.u, I * p.z);
    let nf = n as f64;
    let lhs = r_function(w, tau / nf)?;
    let mut rhs = Complex64::new(0.0, 0.0);
    for l in 0..n {
        let big_l = l as f64 - (nf - 1.0) / 2.0;
        rhs += (PI / nf * big_l * big_l * p.z - 2.0 * PI * I * big_l * (w + 0.5)).exp()
            * r_function(nf * w + big_l * tau + (nf - 1.0) / 2.0, nf * tau)?;
    }
    Ok((lhs, rhs))
}

/// `A_T(u, v; τ) = Σ_{t<T} e^{2πiut} A(Tu, v + tτ + (T−1)/2; Tτ)` and `A(u, v) = θ(v) μ(u, v)`.
pub fn at_decomposition(t_mod: u32, p: &EvaluationPoint) -> Result<Vec<Sides>, MockError> {
    let tau = p.tau();
    let tf = t_mod as f64;
    let lhs = zwegers_a_t(t_mod, p.u, p.v, tau)?;
    let mut rhs = Complex64::new(0.0, 0.0);
    for t in 0..t_mod {
        let s = t as f64;
        rhs += (2.0 * PI * I * p.u * s).exp() * zwegers_a(tf * p.u, p.v + s * tau + (tf - 1.0) / 2.0, tf * tau)?;
    }
    let a1 = zwegers_a(p.u, p.v, tau)?;
    let split = theta_tau(p.v, tau)? * mu(p.u, p.v, tau)?;
    Ok(vec![(lhs, rhs), (a1, split)])
}

/// Kernel sum `Σ_t C_{T,t}` and the level-`T` Appell form, both against the defining series.
pub fn kernel_sum(t_mod: u32, p: &EvaluationPoint) -> Result<Vec<Sides>, MockError> {
    let tau = p.tau();
    let direct = moment_kernel(t_mod, p.u, tau)?;
    let half = (t_mod as i64 - 1) / 2;
    let mut total = Complex64::new(0.0, 0.0);
    for t in -half..=half {
        total += c_kernel(t_mod, t, p.u, tau)?;
    }
    Ok(vec![(direct, total), (direct, moment_kernel_appell(t_mod, p.u, tau)?)])
}

/// `C_{T,0}` from the Appell sum against its eta-quotient form.
pub fn kernel_dual(t_mod: u32, p: &EvaluationPoint) -> Result<Sides, MockError> {
    let tau = p.tau();
    Ok((c_kernel(t_mod, 0, p.u, tau)?, c_kernel_eta_quotient(t_mod, p.u, tau)?))
}

struct Split {
    g: i64,
    gc: i64,
    kr: i64,
    hp: i64,
    hc: i64,
}

fn split(t_mod: i64, h: i64, k: i64) -> Result<Split, MockError> {
    let g = t_mod.gcd(&k);
    let (gc, kr) = (t_mod / g, k / g);
    let hp = gc * h;
    let (hc, _) = mod_inverse_pair(hp, kr)?;
    Ok(Split { g, gc, kr, hp, hc })
}

/// Transformation of `C_{T,0}` at `τ = (h+iz)/k`, written through `η` and `θ` at
/// `τ' = T(H_c + i/(γ_c z))/(γ_c k)`.
pub fn kernel_zero_modular(t_mod: u32, p: &EvaluationPoint) -> Result<Sides, MockError> {
    let tm = t_mod as i64;
    let s = split(tm, p.h, p.k)?;
    let (inv, _) = mod_inverse_pair(p.h, p.k)?;
    let (gc, kf) = (s.gc as f64, p.k as f64);
    let tau = p.tau();
    let lhs = c_kernel(t_mod, 0, p.u, tau)?;
    let tp = tm as f64 / (gc * kf) * (re(s.hc as f64) + I / (gc * p.z));
    let e = eta_tau(tp)?;
    let rhs = -2.0 / gc
        * (I / p.z).sqrt()
        * (PI * p.u).sin()
        * (PI * kf * tm as f64 * p.u * p.u / p.z).exp()
        * (PI * I * tau / 12.0).exp()
        / (chi_c(p.h, p.k)? * eta_tau((re(inv as f64) + I / p.z) / kf)?)
        * e
        * e
        * e
        / theta_tau(I * p.u * tm as f64 / (gc * p.z), tp)?;
    Ok((lhs, rhs))
}

/// Transformation of `C_{T,t}`, `t ≠ 0`, into a `μ` term plus a sum of Mordell integrals
/// weighted by `U_μ` and `U_H`.
pub fn kernel_shift_modular(t_mod: u32, t: i64, p: &EvaluationPoint) -> Result<Sides, MockError> {
    let tm = t_mod as i64;
    check_shift(tm, t)?;
    if t == 0 {
        return Err(MockError::InvalidShift { t_mod, t });
    }
    let s = split(tm, p.h, p.k)?;
    let r = rho_t(tm, t * s.hp);
    let (gc, kf, tf, rf, tt) = (s.gc as f64, p.k as f64, tm as f64, r as f64, t as f64);
    let (z, u, tau) = (p.z, p.u, p.tau());
    let lhs = c_kernel(t_mod, t, u, tau)?;
    let pre = -2.0 * I * (PI * u).sin() * (PI * I * tau / 12.0).exp() / eta_tau(tau)?
        * theta_tau(tt * tau, tf * tau)?
        * (I / (gc * z)).sqrt()
        * (PI * kf / (tf * z) * (tf * u - rf / (gc * kf)).powu(2) - tt * tt * PI * z / (tf * kf)).exp();
    let tp = s.g as f64 / kf * (re(s.hc as f64) + I / (gc * z));
    let u2 = I * u * tf / (gc * z);
    let v2 = rf / (gc * kf) * (re(s.hc as f64) + I / (gc * z)) - tt / (gc * kf) * (1.0 + (s.hp * s.hc) as f64);
    let mu_part = u_mu(tm, t, s.hp, s.kr)?.to_complex() * mu(u2, v2, tp)?;
    let tau_h = I * tf / (gc * gc * kf * z);
    let mut h_part = Complex64::new(0.0, 0.0);
    for l in 0..s.kr {
        let a = ratio_f64(alpha(tm, t, l, s.kr)?);
        let w = u2 - rf * I / (gc * gc * kf * z) - a;
        h_part += u_h(tm, t, l, s.hp, s.kr)?.to_complex() * mordell(w, tau_h)?;
    }
    h_part *= I / (2.0 * (s.kr as f64).sqrt());
    Ok((lhs, pre * (mu_part + h_part)))
}

fn ratio_f64(a: unitarith::Angle) -> f64 {
    *a.numer() as f64 / *a.denom() as f64
}

fn composite_shift(t_mod: i64, t: i64, p: &EvaluationPoint) -> Result<(i64, i64, Complex64), MockError> {
    check_shift(t_mod, t)?;
    let r = rho_t(t_mod, t * p.h);
    let (inv, _) = mod_inverse_pair(p.h, p.k)?;
    let (tf, kf, rf) = (t_mod as f64, p.k as f64, r as f64);
    let pre = (-PI * (t * t) as f64 * p.z / (tf * tf * kf)
        + PI * kf * (p.u - rf / (tf * kf)).powu(2) / p.z
        - 2.0 * PI * I * p.u * t as f64 / tf)
        .exp();
    Ok((r, inv, pre))
}

/// `R(u − tτ/T; τ)` at `τ = (h+iz)/k` against its expansion in `R − H` at `i/(kz)`.
pub fn r_composite(t_mod: u32, t: i64, p: &EvaluationPoint) -> Result<Sides, MockError> {
    let tm = t_mod as i64;
    let (r, _, pre) = composite_shift(tm, t, p)?;
    let (tf, kf, rf) = (tm as f64, p.k as f64, r as f64);
    let tau = p.tau();
    let lhs = r_function(p.u - t as f64 / tf * tau, tau)?;
    let tp = I / (kf * p.z);
    let mut sum = Complex64::new(0.0, 0.0);
    for l in 0..p.k {
        let w = I * p.u / p.z - rf * I / (tf * kf * p.z) - ratio_f64(alpha(tm, t, l, p.k)?);
        sum += u_h(tm, t, l, p.h, p.k)?.to_complex() * (r_function(w, tp)? - mordell(w, tp)?);
    }
    Ok((lhs, (I / (kf * p.z)).sqrt() * pre * sum))
}

/// `μ̂(u, tτ/T; τ)` at `τ = (h+iz)/k` against `U_μ μ̂` at `(H+i/z)/k`.
pub fn muhat_composite(t_mod: u32, t: i64, p: &EvaluationPoint) -> Result<Sides, MockError> {
    let tm = t_mod as i64;
    let (r, inv, pre) = composite_shift(tm, t, p)?;
    let (tf, kf, rf, tt) = (tm as f64, p.k as f64, r as f64, t as f64);
    let tau = p.tau();
    let lhs = mu_hat(p.u, tt / tf * tau, tau)?;
    let hf = inv as f64;
    let v2 = rf / (tf * kf) * (re(hf) + I / p.z) - tt / (tf * kf) * (1.0 + (p.h * inv) as f64);
    let rhs = (I / p.z).sqrt()
        * pre
        * u_mu(tm, t, p.h, p.k)?.to_complex()
        * mu_hat(I * p.u / p.z, v2, dual_tau(p)?)?;
    Ok((lhs, rhs))
}
