//! Multiprecision plumbing shared by the asymptotic layers.
//!
//! Real arithmetic is MPFR through [`rug::Float`]. Complex values are a plain
//! pair of floats ([`MpComplex`]) since the MPC library is not linked.

use std::collections::HashMap;
use std::ffi::CStr;
use std::sync::{Arc, Mutex, OnceLock};

pub use rug;
use rug::float::Constant;
use rug::ops::Pow;
use rug::Float;

mod complex;

pub use complex::MpComplex;

/// Default working precision in bits for the asymptotic main terms.
pub const DEFAULT_PREC: u32 = 320;

/// Versions of the linked GMP and MPFR libraries, as `(gmp, mpfr)`.
pub fn library_versions() -> (String, String) {
    let gmp = format!(
        "{}.{}.{}",
        gmp_mpfr_sys::gmp::VERSION,
        gmp_mpfr_sys::gmp::VERSION_MINOR,
        gmp_mpfr_sys::gmp::VERSION_PATCHLEVEL
    );
    // SAFETY: mpfr_get_version returns a pointer to a static NUL-terminated string.
    let mpfr = unsafe { CStr::from_ptr(gmp_mpfr_sys::mpfr::get_version()) }
        .to_string_lossy()
        .into_owned();
    (gmp, mpfr)
}

pub fn pi(prec: u32) -> Float {
    Float::with_val(prec, Constant::Pi)
}

pub fn from_ratio(prec: u32, num: i128, den: i128) -> Float {
    let n = Float::with_val(prec, rug::Integer::from(num));
    n / rug::Integer::from(den)
}

/// Parses a decimal integer string (as produced by a big-integer `to_string`).
pub fn from_decimal(prec: u32, digits: &str) -> Float {
    let parsed = Float::parse(digits).expect("decimal integer literal");
    Float::with_val(prec, parsed)
}

/// Rounds to the nearest `f64`; values beyond the `f64` range saturate to infinity.
pub fn to_f64(x: &Float) -> f64 {
    x.to_f64()
}

/// `base^exp` for a real base and rational exponent `num/den`.
pub fn pow_ratio(base: &Float, num: i64, den: i64) -> Float {
    let prec = base.prec();
    let e = Float::with_val(prec, num) / den;
    Float::with_val(prec, base.pow(&e))
}

type NodeCache = Mutex<HashMap<(usize, u32), Arc<GaussLegendre>>>;

/// Gauss–Legendre rule on `[-1, 1]` at a fixed precision.
#[derive(Debug)]
pub struct GaussLegendre {
    pub nodes: Vec<Float>,
    pub weights: Vec<Float>,
}

/// Returns the cached `n`-point rule at precision `prec`.
pub fn gauss_legendre(n: usize, prec: u32) -> Arc<GaussLegendre> {
    static CACHE: OnceLock<NodeCache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(rule) = cache.lock().unwrap().get(&(n, prec)) {
        return Arc::clone(rule);
    }
    let rule = Arc::new(build_rule(n, prec));
    cache
        .lock()
        .unwrap()
        .entry((n, prec))
        .or_insert_with(|| Arc::clone(&rule));
    rule
}

fn legendre_with_derivative(n: usize, x: &Float) -> (Float, Float) {
    let prec = x.prec();
    let mut p0 = Float::with_val(prec, 1);
    let mut p1 = x.clone();
    for j in 2..=n {
        let j_f = j as u32;
        let t = Float::with_val(prec, x * &p1) * (2 * j_f - 1);
        let p2 = (t - Float::with_val(prec, &p0 * (j_f - 1))) / j_f;
        p0 = std::mem::replace(&mut p1, p2);
    }
    let num = Float::with_val(prec, x * &p1) - &p0;
    let den = Float::with_val(prec, x * x) - 1u32;
    let dp = num / den * n as u32;
    (p1, dp)
}

fn build_rule(n: usize, prec: u32) -> GaussLegendre {
    assert!(n >= 2, "Gauss-Legendre rule needs at least two nodes");
    let work = prec + 32;
    let tol = Float::with_val(work, Float::i_exp(1, -(prec as i32) - 8));
    let half = n / 2;
    let mut nodes = Vec::with_capacity(n);
    let mut weights = Vec::with_capacity(n);
    for i in 1..=half {
        let guess = (std::f64::consts::PI * (i as f64 - 0.25) / (n as f64 + 0.5)).cos();
        let mut x = Float::with_val(work, guess);
        for _ in 0..64 {
            let (p, dp) = legendre_with_derivative(n, &x);
            let dx = p / &dp;
            x -= &dx;
            if dx.abs() < tol {
                break;
            }
        }
        let (_, dp) = legendre_with_derivative(n, &x);
        let one_minus = Float::with_val(work, 1u32) - Float::with_val(work, &x * &x);
        let w = Float::with_val(work, 2u32) / (one_minus * Float::with_val(work, &dp * &dp));
        nodes.push(Float::with_val(prec, &x));
        weights.push(Float::with_val(prec, &w));
    }
    let mut all_nodes: Vec<Float> = nodes.iter().map(|x| Float::with_val(prec, -x)).collect();
    let mut all_weights = weights.clone();
    if n % 2 == 1 {
        let zero = Float::with_val(work, 0);
        let (_, dp) = legendre_with_derivative(n, &zero);
        all_nodes.push(Float::with_val(prec, 0));
        all_weights.push(Float::with_val(prec, Float::with_val(work, 2u32) / (dp.clone() * &dp)));
    }
    for (x, w) in nodes.into_iter().zip(weights).rev() {
        all_nodes.push(x);
        all_weights.push(w);
    }
    GaussLegendre {
        nodes: all_nodes,
        weights: all_weights,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rule_integrates_polynomials_exactly() {
        let rule = gauss_legendre(9, 200);
        // degree 16 monomial integrates to 2/17
        let mut sum = Float::with_val(200, 0);
        for (x, w) in rule.nodes.iter().zip(&rule.weights) {
            sum += Float::with_val(200, x.clone().pow(16u32)) * w;
        }
        let exact = Float::with_val(200, 2) / 17u32;
        let err = (sum - exact).abs();
        assert!(err < Float::with_val(200, Float::i_exp(1, -180)));
    }

    #[test]
    fn weights_sum_to_two() {
        for n in [2usize, 7, 32] {
            let rule = gauss_legendre(n, 128);
            let total = rule.weights.iter().fold(Float::with_val(128, 0), |acc, w| acc + w);
            assert!((total - 2u32).abs() < Float::with_val(128, Float::i_exp(1, -110)));
        }
    }

    #[test]
    fn versions_are_reported() {
        let (gmp, mpfr) = library_versions();
        assert!(gmp.starts_with('6'));
        assert!(mpfr.starts_with('4'));
    }
}
