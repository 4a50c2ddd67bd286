use std::f64::consts::PI;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::bernoulli::bernoulli_half;
use crate::SpecError;

/// `rational · π^{pi_power}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KappaValue {
    pub rational: BigRational,
    pub pi_power: i32,
}

impl KappaValue {
    pub fn zero() -> Self {
        KappaValue {
            rational: BigRational::zero(),
            pi_power: 0,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rational.is_zero()
    }

    pub fn to_f64(&self) -> f64 {
        ratio_to_f64(&self.rational) * PI.powi(self.pi_power)
    }
}

pub(crate) fn ratio_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, j| acc * j)
}

fn pow2(e: u32) -> BigInt {
    BigInt::one() << e as usize
}

/// Coefficient of the sine-over-sinh family; zero off `ℕ₀³`.
///
/// `(2(a+b+c))!/(a!(2b+1)!(2c)!)·(−1)^{a+c}·π^{−a}·2^{−2(a+b)}·B_{2c}(1/2)`.
pub fn kappa(a: i32, b: i32, c: i32) -> KappaValue {
    if a < 0 || b < 0 || c < 0 {
        return KappaValue::zero();
    }
    let (a, b, c) = (a as u32, b as u32, c as u32);
    let num = factorial(2 * (a + b + c));
    let den = factorial(a) * factorial(2 * b + 1) * factorial(2 * c) * pow2(2 * (a + b));
    let sign = if (a + c) % 2 == 0 { 1 } else { -1 };
    let rational = BigRational::new(num * sign, den) * bernoulli_half(2 * c as usize);
    KappaValue {
        rational,
        pi_power: -(a as i32),
    }
}

/// Coefficient of the sine-times-Gaussian family; zero off `ℕ₀³`.
///
/// `(2a+2b+1+c)!/(a!(2b+1)!c!)·(−1)^{a+c+1}·π^{−a}·2^{−(2a+2b+1)}`.
pub fn kappa_h(a: i32, b: i32, c: i32) -> KappaValue {
    if a < 0 || b < 0 || c < 0 {
        return KappaValue::zero();
    }
    let (a, b, c) = (a as u32, b as u32, c as u32);
    let num = factorial(2 * a + 2 * b + 1 + c);
    let den = factorial(a) * factorial(2 * b + 1) * factorial(c) * pow2(2 * a + 2 * b + 1);
    let sign = if (a + c + 1) % 2 == 0 { 1 } else { -1 };
    KappaValue {
        rational: BigRational::new(num * sign, den),
        pi_power: -(a as i32),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `e^{πνu²/z}·sin(πu)/sinh(πu/z)`, index constraint `2a+2b+2c = r`.
    Kappa,
    /// `sin(πu)·e^{πνu²/z}·e^{−2πiλu/z}`, index constraint `2a+2b+1+c = r`.
    KappaH,
}

/// All nonzero coefficients of one family at a fixed total order `r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionCoefficients {
    pub family: Family,
    pub r: u32,
    pub entries: Vec<((u32, u32, u32), KappaValue)>,
}

impl ExpansionCoefficients {
    pub fn new(family: Family, r: u32) -> Self {
        let mut entries = Vec::new();
        for a in 0..=r {
            for c in 0..=r {
                let rest = match family {
                    Family::Kappa => r as i64 - 2 * a as i64 - 2 * c as i64,
                    Family::KappaH => r as i64 - 2 * a as i64 - 1 - c as i64,
                };
                if rest < 0 || rest % 2 != 0 {
                    continue;
                }
                let b = (rest / 2) as u32;
                let v = match family {
                    Family::Kappa => kappa(a as i32, b as i32, c as i32),
                    Family::KappaH => kappa_h(a as i32, b as i32, c as i32),
                };
                if !v.is_zero() {
                    entries.push(((a, b, c), v));
                }
            }
        }
        ExpansionCoefficients { family, r, entries }
    }

    /// The right side of the generating identity at `(ν, z, λ)`, as the
    /// coefficient of `(2πiu)^r/r!`.
    pub fn assemble(&self, nu: Complex64, z: Complex64, lambda: Complex64) -> Complex64 {
        let mut s = Complex64::new(0.0, 0.0);
        for &((a, _, c), ref v) in &self.entries {
            let (a, c) = (a as i32, c as i32);
            s += match self.family {
                Family::Kappa => nu.powi(a) * z.powi(1 - a - 2 * c) * v.to_f64(),
                Family::KappaH => nu.powi(a) * lambda.powi(c) * z.powi(-a - c) * v.to_f64(),
            };
        }
        match self.family {
            Family::Kappa => s,
            Family::KappaH => s * Complex64::i(),
        }
    }

    /// CSV rows `family,r,a,b,c,numerator,denominator,pi_power`.
    pub fn csv_rows(&self) -> Vec<String> {
        let name = match self.family {
            Family::Kappa => "kappa",
            Family::KappaH => "kappa_h",
        };
        self.entries
            .iter()
            .map(|((a, b, c), v)| {
                format!(
                    "{name},{},{a},{b},{c},{},{},{}",
                    self.r,
                    v.rational.numer(),
                    v.rational.denom(),
                    v.pi_power
                )
            })
            .collect()
    }
}

fn left_side(family: Family, nu: Complex64, z: Complex64, lambda: Complex64, u: Complex64) -> Complex64 {
    let i = Complex64::i();
    let gauss = (PI * nu * u * u / z).exp();
    match family {
        Family::Kappa => gauss * (PI * u).sin() / (PI * u / z).sinh(),
        Family::KappaH => (PI * u).sin() * gauss * (-2.0 * PI * i * lambda * u / z).exp(),
    }
}

/// Coefficients of `(2πiu)^r/r!` for `r ≤ r_max` by the discrete Cauchy integral.
pub fn cauchy_coefficients(
    f: impl Fn(Complex64) -> Complex64,
    radius: f64,
    points: usize,
    r_max: u32,
) -> Vec<Complex64> {
    let vals: Vec<Complex64> = (0..points)
        .map(|j| f(Complex64::from_polar(radius, 2.0 * PI * j as f64 / points as f64)))
        .collect();
    let mut out = Vec::with_capacity(r_max as usize + 1);
    let mut fact = 1.0;
    for r in 0..=r_max {
        if r > 0 {
            fact *= r as f64;
        }
        let mut c = Complex64::new(0.0, 0.0);
        for (j, v) in vals.iter().enumerate() {
            c += v * Complex64::from_polar(1.0, -2.0 * PI * (j as f64) * r as f64 / points as f64);
        }
        c /= points as f64 * radius.powi(r as i32);
        out.push(c * fact / (2.0 * PI * Complex64::i()).powi(r as i32));
    }
    out
}

/// Largest relative error between the extracted Taylor coefficients and the
/// coefficient sums for `r ≤ r_max`.
///
/// Coefficients that vanish identically are compared in absolute terms against
/// the scale of the nonvanishing ones.
pub fn taylor_identity_check(
    family: Family,
    nu: Complex64,
    z: Complex64,
    lambda: Complex64,
    r_max: u32,
) -> Result<f64, SpecError> {
    if z.norm() == 0.0 {
        return Err(SpecError::Domain("z must be nonzero".into()));
    }
    // sinh(πu/z) vanishes at u = i·z, so stay well inside |u| < |z|
    let radius = match family {
        Family::Kappa => (0.45 * z.norm()).min(0.45),
        Family::KappaH => 0.45,
    };
    let f = |u: Complex64| left_side(family, nu, z, lambda, u);
    let coarse = cauchy_coefficients(f, radius, 96, r_max);
    let fine = cauchy_coefficients(f, radius, 192, r_max);
    let scale = fine.iter().map(|c| c.norm()).fold(0.0, f64::max);
    for (a, b) in coarse.iter().zip(&fine) {
        if (a - b).norm() > 1e-11 * scale {
            return Err(SpecError::Unconverged(format!(
                "Cauchy extraction unstable: {} vs {}",
                a, b
            )));
        }
    }
    let mut worst = 0.0f64;
    for r in 0..=r_max {
        let want = ExpansionCoefficients::new(family, r).assemble(nu, z, lambda);
        let got = fine[r as usize];
        let denom = if want.norm() > 0.0 { want.norm() } else { scale };
        worst = worst.max((got - want).norm() / denom);
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn spot_values() {
        assert_eq!(kappa(0, 0, 1).rational, q(1, 12));
        assert_eq!(kappa_h(0, 0, 0).rational, q(-1, 2));
        assert_eq!(kappa_h(0, 0, 0).pi_power, 0);
        assert!(kappa(-1, 0, 1).is_zero());
        assert!(kappa_h(0, -1, 0).is_zero());
        assert_eq!(kappa(2, 0, 0).pi_power, -2);
    }

    #[test]
    fn order_zero_kappa_is_z() {
        let z = Complex64::new(0.7, 0.2);
        let e = ExpansionCoefficients::new(Family::Kappa, 0);
        let v = e.assemble(Complex64::new(0.3, 0.0), z, Complex64::new(0.0, 0.0));
        assert!((v - z).norm() < 1e-15);
    }

    #[test]
    fn odd_orders_vanish_for_kappa() {
        for r in [1, 3, 5, 7] {
            assert!(ExpansionCoefficients::new(Family::Kappa, r).entries.is_empty());
        }
    }

    #[test]
    fn csv_has_one_row_per_entry() {
        let e = ExpansionCoefficients::new(Family::KappaH, 3);
        let rows = e.csv_rows();
        assert_eq!(rows.len(), e.entries.len());
        assert!(rows.iter().all(|r| r.starts_with("kappa_h,3,")));
    }
}
