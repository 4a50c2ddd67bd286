use std::f64::consts::PI;

use num_complex::Complex64;
use specfun::cauchy_coefficients;

use crate::appell::zwegers_a_t;
use crate::jacobi::{check_tau, eta_tau, theta_tau};
use crate::series::{bilateral, geometric_quotient};
use crate::MockError;

const I: Complex64 = Complex64::new(0.0, 1.0);

fn check_shift(t_mod: u32, t: i64) -> Result<(), MockError> {
    if t_mod % 2 == 0 || t.unsigned_abs() > (t_mod as u64 - 1) / 2 {
        return Err(MockError::InvalidShift { t_mod, t });
    }
    Ok(())
}

/// `q^{1/24}/η(τ) = 1/(q;q)_∞`.
fn inverse_euler(tau: Complex64) -> Result<Complex64, MockError> {
    Ok((2.0 * PI * I * tau / 24.0).exp() / eta_tau(tau)?)
}

/// Kernel `C_{T,t}(u, q) = −2i sin(πu)·q^{1/24}/η(τ)·e^{2πiut}·A(Tu, tτ; Tτ)` with `q = e^{2πiτ}`.
///
/// For `t = 0` the eta-quotient form is evaluated as well and the two must agree.
pub fn c_kernel(t_mod: u32, t: i64, u: Complex64, tau: Complex64) -> Result<Complex64, MockError> {
    check_shift(t_mod, t)?;
    let tf = t_mod as f64;
    let a = zwegers_a_t(1, tf * u, t as f64 * tau, tf * tau)?;
    let v = -2.0 * I * (PI * u).sin() * inverse_euler(tau)? * (2.0 * PI * I * u * t as f64).exp() * a;
    if t == 0 {
        let dual = c_kernel_eta_quotient(t_mod, u, tau)?;
        let rel = (v - dual).norm() / v.norm().max(dual.norm());
        if rel > 1e-10 {
            return Err(MockError::DualFormMismatch(rel));
        }
    }
    Ok(v)
}

/// `C_{T,0}(u, q) = −2 sin(πu)·q^{1/24}·η(Tτ)³/(η(τ)·θ(Tu; Tτ))`.
pub fn c_kernel_eta_quotient(t_mod: u32, u: Complex64, tau: Complex64) -> Result<Complex64, MockError> {
    let tf = t_mod as f64;
    let e = eta_tau(tf * tau)?;
    Ok(-2.0 * (PI * u).sin() * inverse_euler(tau)? * e * e * e / theta_tau(tf * u, tf * tau)?)
}

/// Two-variable generating function `Σ_{m,n} N_T(m,n) x^m q^n` with `x = e^{2πiu}`, by its defining series.
pub fn moment_kernel(t_mod: u32, u: Complex64, tau: Complex64) -> Result<Complex64, MockError> {
    check_tau(tau)?;
    let tf = t_mod as f64;
    let s = bilateral(0, |n| {
        let nf = n as f64;
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        let a = PI * I * nf * (tf * nf + 1.0) * tau;
        let d = 2.0 * PI * I * (u + nf * tau);
        sign * geometric_quotient(a, d)
    })?;
    Ok((1.0 - (2.0 * PI * I * u).exp()) * inverse_euler(tau)? * s)
}

/// The same function through the level-`T` Appell sum.
pub fn moment_kernel_appell(t_mod: u32, u: Complex64, tau: Complex64) -> Result<Complex64, MockError> {
    let tf = t_mod as f64;
    let shift = -(tf - 1.0) / 2.0 * tau;
    Ok((1.0 - (2.0 * PI * I * u).exp())
        * inverse_euler(tau)?
        * (-PI * I * u * tf).exp()
        * zwegers_a_t(t_mod, u, shift, tau)?)
}

/// Coefficients of `(2πiu)^r/r!` of [`moment_kernel`] for `r ≤ r_max`, by Cauchy extraction.
pub fn taylor_moments(t_mod: u32, r_max: u32, tau: Complex64, radius: f64) -> Result<Vec<Complex64>, MockError> {
    if r_max > 12 {
        return Err(MockError::Domain("r_max above 12".into()));
    }
    let eval = |u: Complex64| moment_kernel(t_mod, u, tau).unwrap_or(Complex64::new(f64::NAN, f64::NAN));
    let coarse = cauchy_coefficients(eval, radius, 64, r_max);
    let fine = cauchy_coefficients(eval, radius, 128, r_max);
    let scale = fine.iter().map(|c| c.norm()).fold(0.0, f64::max);
    if !scale.is_finite() {
        return Err(MockError::Unconverged("kernel evaluation failed on the sample circle".into()));
    }
    for (a, b) in coarse.iter().zip(&fine) {
        if (a - b).norm() > 1e-9 * scale {
            return Err(MockError::Unconverged("Cauchy extraction unstable under sample doubling".into()));
        }
    }
    Ok(fine)
}
