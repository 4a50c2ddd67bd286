use std::f64::consts::PI;

use num_complex::Complex64;

use crate::bessel::{bessel_i, power_series};
use crate::SpecError;

/// `E(x) = 2∫_0^x e^{−πu²} du = erf(√π·x)`.
///
/// ```
/// assert_eq!(specfun::gauss_error_e(0.0), 0.0);
/// assert!((specfun::gauss_error_e(10.0) - 1.0).abs() < 1e-12);
/// ```
pub fn gauss_error_e(x: f64) -> f64 {
    libm::erf(PI.sqrt() * x)
}

/// `1 − E(x)` without cancellation for large `x`.
pub fn gauss_error_ec(x: f64) -> f64 {
    libm::erfc(PI.sqrt() * x)
}

/// `1/cosh(π·w)` without overflow for large `|Re w|`.
pub(crate) fn sech_pi(w: Complex64) -> Complex64 {
    let s = if w.re >= 0.0 { w } else { -w };
    let e = (-PI * s).exp();
    2.0 * e / (1.0 + e * e)
}

/// Smallest `X` with `a·X² + b·X − c·ln(1+X) ≥ 45` (integrand envelope below `e^{−45}`).
fn cutoff(a: f64, b: f64, c: u32) -> Result<f64, SpecError> {
    if a <= 0.0 && b <= 0.0 {
        return Err(SpecError::NonDecaying);
    }
    let mut x = 1.0;
    while a * x * x + b * x - c as f64 * (1.0 + x).ln() < 45.0 {
        x *= 1.25;
        if x > 1e6 {
            return Err(SpecError::NonDecaying);
        }
    }
    Ok(x)
}

/// Trapezoid rule on `[−X, X]`, halving the step until two levels agree.
pub(crate) fn line_integral(
    f: impl Fn(f64) -> Complex64,
    x_max: f64,
    width: f64,
    tol: f64,
) -> Result<Complex64, SpecError> {
    let mut h = (0.25 * width).min(0.25);
    let mut n = (x_max / h).ceil() as i64;
    h = x_max / n as f64;
    let mut sum: Complex64 = (-n..=n).map(|j| f(j as f64 * h)).sum();
    let mut prev = sum * h;
    for _ in 0..12 {
        // add midpoints of the current grid
        let mid: Complex64 = (-n..n).map(|j| f((j as f64 + 0.5) * h)).sum();
        sum += mid;
        h /= 2.0;
        n *= 2;
        let cur = sum * h;
        if (cur - prev).norm() <= tol * cur.norm().max(1.0) {
            return Ok(cur);
        }
        prev = cur;
    }
    Err(SpecError::Unconverged("trapezoid refinement".into()))
}

/// Mordell integral `H(w; τ) = ∫_ℝ e^{πiτx² − 2πwx}/cosh(πx) dx`.
///
/// Needs `Im τ > 0`, or `Im τ = 0` with `|Re w| < 1/2`.
pub fn mordell_h(w: Complex64, tau: Complex64, tol: f64) -> Result<Complex64, SpecError> {
    let a = PI * tau.im;
    let b = PI - 2.0 * PI * w.re.abs();
    if a < 0.0 || (a == 0.0 && b <= 0.0) {
        return Err(SpecError::NonDecaying);
    }
    let x_max = cutoff(a, b, 0)?;
    let width = if a > 0.0 { 1.0 / a.sqrt() } else { 1.0 };
    let i = Complex64::i();
    line_integral(
        |x| (PI * i * tau * x * x - 2.0 * PI * w * x).exp() * sech_pi(Complex64::new(x, 0.0)),
        x_max,
        width,
        tol,
    )
}

/// `∫_ℝ x^c e^{−πTx²/(γ²kz) + 2πxα}/cosh(π(x+iϱ)) dx`.
#[allow(clippy::too_many_arguments)]
pub fn script_h(
    c: u32,
    t_mod: u32,
    alpha: f64,
    gamma: f64,
    varrho: f64,
    k: u32,
    z: Complex64,
    tol: f64,
) -> Result<Complex64, SpecError> {
    if varrho.abs() >= 0.5 {
        return Err(SpecError::Domain(format!("|ϱ| = {} puts a pole on the line", varrho.abs())));
    }
    let zi = z.inv();
    if zi.re <= 0.0 {
        return Err(SpecError::Domain("Re(1/z) must be positive".into()));
    }
    let coeff = PI * t_mod as f64 / (gamma * gamma * k as f64) * zi;
    let x_max = cutoff(coeff.re, PI - 2.0 * PI * alpha.abs(), c)?;
    let width = (1.0 / coeff.norm().sqrt()).min(0.5 - varrho.abs());
    line_integral(
        |x| {
            x.powi(c as i32)
                * (-coeff * x * x + 2.0 * PI * x * alpha).exp()
                * sech_pi(Complex64::new(x, varrho))
        },
        x_max,
        width,
        tol,
    )
}

/// Parameters of the Bessel-weighted integral over `[−1, 1]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IntegralParams {
    pub t_mod: u32,
    pub alpha: f64,
    pub beta: f64,
    pub delta: f64,
    /// Already divided by `T`; must satisfy `|varrho| < 1/2`.
    pub varrho: f64,
    pub c: u32,
    /// `2d`, an odd integer with `d ≤ −1/2`.
    pub two_d: i32,
    pub k: u32,
    pub n: u64,
    pub gamma_co: u32,
}

impl IntegralParams {
    pub fn validate(&self) -> Result<(), SpecError> {
        if !(self.beta > 0.0) {
            return Err(SpecError::Domain(format!("β = {} must be positive", self.beta)));
        }
        if self.varrho.abs() >= 0.5 {
            return Err(SpecError::Domain("|ϱ| must be below 1/2".into()));
        }
        if self.two_d % 2 == 0 || self.two_d > -1 {
            return Err(SpecError::Domain(format!("2d = {} must be odd and ≤ −1", self.two_d)));
        }
        if 2.0 * self.n as f64 + self.delta <= 0.0 {
            return Err(SpecError::Domain("2n + δ must be positive".into()));
        }
        Ok(())
    }

    /// `λ = √β·γ_Co/√T`
    pub fn lambda(&self) -> f64 {
        self.beta.sqrt() * self.gamma_co as f64 / (self.t_mod as f64).sqrt()
    }

    /// Bessel order `−d−1`, doubled.
    pub fn two_nu(&self) -> i32 {
        -self.two_d - 2
    }

    /// `2π√(β(2n+δ))/k`
    pub fn bessel_scale(&self) -> f64 {
        2.0 * PI * (self.beta * (2.0 * self.n as f64 + self.delta)).sqrt() / self.k as f64
    }
}

/// `y^{−ν} I_ν(y)` as a function of `y²`; entire and positive for `ν > −1`.
pub fn bessel_g(two_nu: i32, y2: f64) -> Result<f64, SpecError> {
    if two_nu < -1 || two_nu % 2 == 0 {
        return Err(SpecError::UnsupportedOrder(two_nu));
    }
    let nu = two_nu as f64 / 2.0;
    if y2 < 1.0 {
        let y = y2.max(0.0).sqrt();
        if y == 0.0 {
            return Ok(1.0 / (2f64.powf(nu) * libm::tgamma(nu + 1.0)));
        }
        return Ok(power_series(nu, y) / y.powf(nu));
    }
    let y = y2.sqrt();
    Ok(bessel_i(two_nu, y)? / y.powf(nu))
}

/// Gauss–Legendre sum over `[−1, 1]`, doubling the node count until two levels
/// agree to `rel_tol` relative to `∫|f|`.
pub fn gauss_legendre_converged(
    f: impl Fn(f64) -> Result<Complex64, SpecError>,
    rel_tol: f64,
) -> Result<(Complex64, usize), SpecError> {
    let mut prev: Option<Complex64> = None;
    let mut n = 16;
    while n <= 1024 {
        let rule = mpfloat::gauss_legendre(n, 64);
        let mut s = Complex64::new(0.0, 0.0);
        let mut mass = 0.0;
        for (x, w) in rule.nodes.iter().zip(&rule.weights) {
            let v = f(x.to_f64())? * w.to_f64();
            s += v;
            mass += v.norm();
        }
        if let Some(p) = prev {
            // measured against ∫|f| so that integrals cancelling to zero still converge
            if (s - p).norm() <= rel_tol * mass.max(f64::MIN_POSITIVE) {
                return Ok((s, n));
            }
        }
        prev = Some(s);
        n *= 2;
    }
    Err(SpecError::Unconverged("Gauss-Legendre doubling".into()))
}

/// `∫_{−1}^{1} (λx)^c e^{2πλαx}(1−x²)^{(d+1)/2} I_{−d−1}(C√(1−x²))/cosh(π(λx+iϱ)) dx`
/// with `C = 2π√(β(2n+δ))/k`, in double precision.
///
/// The Bessel factor is rewritten as `C^ν·G_ν(C²(1−x²))`, so the endpoints need no
/// special treatment.
pub fn bessel_integral_i(p: &IntegralParams) -> Result<Complex64, SpecError> {
    p.validate()?;
    let lambda = p.lambda();
    let two_nu = p.two_nu();
    let cap = p.bessel_scale();
    let pref = cap.powf(two_nu as f64 / 2.0);
    let (v, _) = gauss_legendre_converged(
        |x| {
            let g = bessel_g(two_nu, cap * cap * (1.0 - x * x))?;
            let lx = lambda * x;
            Ok(lx.powi(p.c as i32)
                * (2.0 * PI * lambda * p.alpha * x).exp()
                * sech_pi(Complex64::new(lx, p.varrho))
                * (pref * g))
        },
        1e-12,
    )?;
    Ok(v)
}
