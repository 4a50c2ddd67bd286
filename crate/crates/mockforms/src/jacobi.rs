use std::f64::consts::PI;

use num_complex::Complex64;

use crate::series::bilateral;
use crate::MockError;

const I: Complex64 = Complex64::new(0.0, 1.0);

pub(crate) fn check_tau(tau: Complex64) -> Result<(), MockError> {
    if tau.im > 0.0 {
        Ok(())
    } else {
        Err(MockError::NotInUpperHalfPlane(tau.im))
    }
}

/// `η(τ) = e^{2πiτ/24} Σ_n (−1)^n e^{2πiτ·n(3n−1)/2}`.
pub fn eta_tau(tau: Complex64) -> Result<Complex64, MockError> {
    check_tau(tau)?;
    let s = bilateral(0, |n| {
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        sign * (2.0 * PI * I * tau * (n * (3 * n - 1) / 2) as f64).exp()
    })?;
    Ok((2.0 * PI * I * tau / 24.0).exp() * s)
}

/// `θ(v; τ) = Σ_{ν∈ℤ+1/2} e^{πiν²τ + 2πiν(v+1/2)}`.
pub fn theta_tau(v: Complex64, tau: Complex64) -> Result<Complex64, MockError> {
    check_tau(tau)?;
    let center = (-v.im / tau.im - 0.5).round() as i64;
    bilateral(center, |m| {
        let nu = m as f64 + 0.5;
        (PI * I * nu * nu * tau + 2.0 * PI * I * nu * (v + 0.5)).exp()
    })
}

/// Triple-product form `−i q^{1/8} ζ^{−1/2} Π(1−qⁿ)(1−ζqⁿ⁻¹)(1−ζ⁻¹qⁿ)`.
pub fn theta_product_tau(v: Complex64, tau: Complex64) -> Result<Complex64, MockError> {
    check_tau(tau)?;
    let q = (2.0 * PI * I * tau).exp();
    let zeta = (2.0 * PI * I * v).exp();
    let mut prod = Complex64::new(1.0, 0.0);
    let mut qn = Complex64::new(1.0, 0.0);
    for _ in 1..100_000 {
        let qprev = qn;
        qn *= q;
        let f = (1.0 - qn) * (1.0 - zeta * qprev) * (1.0 - qn / zeta);
        prod *= f;
        if qn.norm() * (1.0 + zeta.norm() + 1.0 / zeta.norm()) < 1e-18 {
            return Ok(-I * (PI * I * tau / 4.0).exp() * (-PI * I * v).exp() * prod);
        }
    }
    Err(MockError::Unconverged("theta product".into()))
}

fn iz(z: Complex64) -> Result<Complex64, MockError> {
    if z.re > 0.0 {
        Ok(I * z)
    } else {
        Err(MockError::NonPositiveRealPart(z.re))
    }
}

/// `η(iz)` for `Re z > 0`.
///
/// ```
/// let v = mockforms::eta(num_complex::Complex64::new(1.0, 0.0)).unwrap();
/// assert!(v.re > 0.0 && v.im.abs() < 1e-15);
/// ```
pub fn eta(z: Complex64) -> Result<Complex64, MockError> {
    eta_tau(iz(z)?)
}

/// `θ(v; iz)` for `Re z > 0`.
pub fn theta(v: Complex64, z: Complex64) -> Result<Complex64, MockError> {
    theta_tau(v, iz(z)?)
}

/// `θ(v; iz)` from the triple product.
pub fn theta_product(v: Complex64, z: Complex64) -> Result<Complex64, MockError> {
    theta_product_tau(v, iz(z)?)
}
