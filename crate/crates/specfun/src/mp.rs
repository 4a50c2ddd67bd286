//! Multiprecision counterparts of the Bessel layer and the `[−1, 1]` integral.

use mpfloat::rug::ops::Pow;
use mpfloat::rug::Float;
use mpfloat::{gauss_legendre, pi, MpComplex};

use crate::integrals::IntegralParams;
use crate::SpecError;

/// `I_ν(x)` for half-integer `ν = two_nu/2` by its power series, at the precision of `x`.
///
/// Any half-integer order is accepted; 64 guard bits absorb the cancellation
/// among the leading terms of negative orders.
pub fn bessel_i(two_nu: i32, x: &Float) -> Float {
    let prec = x.prec();
    let work = prec + 64;
    let x = Float::with_val(work, x);
    let half = Float::with_val(work, &x / 2u32);
    let nu = Float::with_val(work, two_nu) / 2u32;
    let lead = Float::with_val(work, (&half).pow(&nu));
    let g = Float::with_val(work, &nu + 1u32).gamma();
    let sum = series_tail(work, two_nu, Float::with_val(work, half.square_ref()), lead / g);
    Float::with_val(prec, sum)
}

/// `y^{−ν}I_ν(y)` as a function of `y²`, by its series.
pub fn bessel_g(two_nu: i32, y2: &Float) -> Float {
    let prec = y2.prec();
    let work = prec + 64;
    let nu = Float::with_val(work, two_nu) / 2u32;
    let two_pow = Float::with_val(work, 2u32).pow(&nu);
    let g = Float::with_val(work, &nu + 1u32).gamma();
    let q = Float::with_val(work, y2) / 4u32;
    Float::with_val(prec, series_tail(work, two_nu, q, 1u32 / (two_pow * g)))
}

/// `Σ_m t_m` with `t_{m+1} = t_m·q/((m+1)(m+1+ν))`.
fn series_tail(work: u32, two_nu: i32, q: Float, first: Float) -> Float {
    let mut term = first;
    let mut sum = term.clone();
    let qf = q.to_f64();
    let eps = Float::with_val(work, Float::i_exp(1, -(work as i32)));
    let mut m: i64 = 0;
    loop {
        m += 1;
        // (m)(m+ν) = m·(2m + 2ν)/2
        let den = m * (2 * m + two_nu as i64);
        term *= &q;
        term *= 2u32;
        term /= den;
        sum += &term;
        let past_peak = (m * m) as f64 > qf;
        if past_peak && Float::with_val(work, term.abs_ref()) <= Float::with_val(work, sum.abs_ref()) * &eps {
            return sum;
        }
    }
}

/// `∫_{−1}^{1} f` by Gauss–Legendre at precision `prec`, doubling from 32 nodes
/// until successive sums agree to `2^{−target_bits}` relative to `∫|f|`.
pub fn integrate(
    prec: u32,
    target_bits: i32,
    f: impl Fn(&Float) -> MpComplex,
) -> Result<(MpComplex, usize), SpecError> {
    let mut prev: Option<MpComplex> = None;
    let mut n = 32;
    while n <= 1024 {
        let rule = gauss_legendre(n, prec);
        let mut s = MpComplex::zero(prec);
        let mut mass = Float::with_val(prec, 0);
        for (x, w) in rule.nodes.iter().zip(&rule.weights) {
            let v = f(x).scale(w);
            mass += v.abs();
            s += &v;
        }
        if let Some(p) = &prev {
            let diff = (&s - p).abs();
            let bound = mass * Float::with_val(prec, Float::i_exp(1, -target_bits));
            if diff <= bound {
                return Ok((s, n));
            }
        }
        prev = Some(s);
        n *= 2;
    }
    Err(SpecError::Unconverged("multiprecision Gauss-Legendre doubling".into()))
}

/// `1/cosh(π(a + ib))` at precision of `a`.
pub fn sech_pi(a: &Float, b: &Float) -> MpComplex {
    let prec = a.prec();
    let p = pi(prec);
    let w = MpComplex::new(Float::with_val(prec, a * &p), Float::with_val(prec, b * &p));
    w.cosh().recip()
}

/// Real parameters of an [`IntegralParams`] held at full precision.
///
/// The `f64` fields of the params are then used only for validation.
#[derive(Clone, Debug, PartialEq)]
pub struct IntegralShape {
    pub alpha: Float,
    pub beta: Float,
    pub delta: Float,
    pub varrho: Float,
}

impl IntegralShape {
    pub fn from_params(p: &IntegralParams, prec: u32) -> Self {
        IntegralShape {
            alpha: Float::with_val(prec, p.alpha),
            beta: Float::with_val(prec, p.beta),
            delta: Float::with_val(prec, p.delta),
            varrho: Float::with_val(prec, p.varrho),
        }
    }
}

/// Multiprecision evaluation of the same integral as [`crate::bessel_integral_i`].
pub fn bessel_integral_i(p: &IntegralParams, prec: u32) -> Result<MpComplex, SpecError> {
    bessel_integral_i_shaped(p, &IntegralShape::from_params(p, prec))
}

/// As [`bessel_integral_i`] with `α, β, δ, ϱ` taken from `shape`, at the precision of `shape.beta`.
pub fn bessel_integral_i_shaped(p: &IntegralParams, shape: &IntegralShape) -> Result<MpComplex, SpecError> {
    p.validate()?;
    let prec = shape.beta.prec();
    let two_nu = p.two_nu();
    let beta = &shape.beta;
    let lambda = Float::with_val(prec, beta.sqrt_ref()) * p.gamma_co / Float::with_val(prec, p.t_mod).sqrt();
    let arg = Float::with_val(prec, Float::with_val(prec, 2 * p.n) + &shape.delta) * beta;
    let cap = Float::with_val(prec, arg.sqrt()) * pi(prec) * 2u32 / p.k;
    let cap2 = Float::with_val(prec, cap.square_ref());
    let pref = Float::with_val(prec, (&cap).pow(Float::with_val(prec, two_nu) / 2u32));
    let varrho = &shape.varrho;
    let growth = Float::with_val(prec, pi(prec) * 2u32) * &lambda * &shape.alpha;
    let (v, _) = integrate(prec, prec as i32 - 24, |x| {
        let one_minus = Float::with_val(prec, 1u32) - Float::with_val(prec, x.square_ref());
        let g = bessel_g(two_nu, &Float::with_val(prec, &cap2 * &one_minus));
        let lx = Float::with_val(prec, &lambda * x);
        let poly = Float::with_val(prec, lx.clone().pow(p.c));
        let e = Float::with_val(prec, &growth * x).exp();
        sech_pi(&lx, varrho).scale(&(poly * e * g * &pref))
    })?;
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_order_closed_form() {
        let x = Float::with_val(200, 3);
        let v = bessel_i(1, &x);
        let want = Float::with_val(200, 2u32) / (pi(200) * &x);
        let want = want.sqrt() * x.clone().sinh();
        let err = Float::with_val(200, &v - &want).abs() / want;
        assert!(err < Float::with_val(200, Float::i_exp(1, -190)));
    }

    #[test]
    fn g_matches_bessel_quotient() {
        let y = Float::with_val(160, 7.5);
        let g = bessel_g(3, &Float::with_val(160, y.square_ref()));
        let q = bessel_i(3, &y) / Float::with_val(160, (&y).pow(Float::with_val(160, 1.5)));
        let err = Float::with_val(160, &g - &q).abs() / q;
        assert!(err < Float::with_val(160, Float::i_exp(1, -150)));
    }
}
