use std::f64::consts::PI;

use num_complex::Complex64;
use specfun::{gauss_error_ec, mordell_h};

use crate::jacobi::{check_tau, theta_tau};
use crate::series::{bilateral, geometric_quotient};
use crate::MockError;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Smallest `|θ(v; τ)|` accepted as a denominator.
pub const THETA_FLOOR: f64 = 1e-13;

/// `A(u, v; τ) = e^{πiu} Σ_n (−1)^n e^{πi(n²+n)τ + 2πinv}/(1 − e^{2πinτ + 2πiu})`.
pub fn zwegers_a(u: Complex64, v: Complex64, tau: Complex64) -> Result<Complex64, MockError> {
    zwegers_a_t(1, u, v, tau)
}

/// Level-`T` Appell function
/// `e^{πiuT} Σ_n (−1)^{Tn} e^{πiTn(n+1)τ + 2πinv}/(1 − e^{2πiu + 2πinτ})`.
pub fn zwegers_a_t(t_mod: u32, u: Complex64, v: Complex64, tau: Complex64) -> Result<Complex64, MockError> {
    check_tau(tau)?;
    let tf = t_mod as f64;
    let center = (-v.im / (tf * tau.im) - 0.5).round() as i64;
    let s = bilateral(center, |n| {
        let nf = n as f64;
        let sign = if (t_mod as i64 * n) % 2 == 0 { 1.0 } else { -1.0 };
        let a = PI * I * tf * nf * (nf + 1.0) * tau + 2.0 * PI * I * nf * v;
        let d = 2.0 * PI * I * (u + nf * tau);
        sign * geometric_quotient(a, d)
    })?;
    Ok((PI * I * u * tf).exp() * s)
}

/// `μ(u, v; τ) = A(u, v; τ)/θ(v; τ)`.
pub fn mu(u: Complex64, v: Complex64, tau: Complex64) -> Result<Complex64, MockError> {
    let th = theta_tau(v, tau)?;
    if th.norm() < THETA_FLOOR {
        return Err(MockError::NearLattice("θ(v) vanishes".into()));
    }
    Ok(zwegers_a(u, v, tau)? / th)
}

/// Non-holomorphic `R(w; τ) = Σ_{ν∈ℤ+1/2} (−1)^{ν−1/2}(sgn ν − E((ν + Im w/Im τ)√(2 Im τ))) e^{−πiν²τ − 2πiνw}`.
pub fn r_function(w: Complex64, tau: Complex64) -> Result<Complex64, MockError> {
    check_tau(tau)?;
    let y = tau.im;
    let a = w.im / y;
    let scale = (2.0 * y).sqrt();
    let center = (-a - 0.5).round() as i64;
    bilateral(center, |m| {
        let nu = m as f64 + 0.5;
        let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
        let sg = nu.signum();
        // sgn ν − E(s) = sgn ν · (1 − E(sgn ν · s)), kept in complementary form
        let factor = sg * gauss_error_ec(sg * scale * (nu + a));
        if factor == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        sign * factor * (-PI * I * nu * nu * tau - 2.0 * PI * I * nu * w).exp()
    })
}

/// `μ̂(u, v; τ) = μ(u, v; τ) + (i/2) R(u − v; τ)`.
pub fn mu_hat(u: Complex64, v: Complex64, tau: Complex64) -> Result<Complex64, MockError> {
    Ok(mu(u, v, tau)? + I / 2.0 * r_function(u - v, tau)?)
}

/// Mordell integral `∫ e^{πiτx² − 2πwx}/cosh(πx) dx` at the verifier tolerance.
pub fn mordell(w: Complex64, tau: Complex64) -> Result<Complex64, MockError> {
    Ok(mordell_h(w, tau, 1e-14)?)
}
