use mpfloat::rug::ops::Pow;
use mpfloat::rug::Float;
use mpfloat::{pi, pow_ratio, MpComplex};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use rayon::prelude::*;
use serde::Serialize;
use specfun::mp::{bessel_integral_i_shaped, IntegralShape};
use specfun::{bessel_integral_i, kappa, kappa_h, IntegralParams};
use unitarith::{alpha, kloosterman_k, kloosterman_partial};

use crate::convert::{big, kappa_value, ratio, scaled_unit};
use crate::{AsympError, AsymptoticQuery};

/// Largest `|Im|/|Re|` accepted for the assembled main term.
pub const IMAG_TOLERANCE: f64 = 1e-8;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MuTerm {
    pub k: u32,
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub value: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MordellTerm {
    pub gamma_gcd: u32,
    pub t: i64,
    pub varrho: i64,
    pub k: u32,
    pub l: u32,
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub value: [f64; 2],
    /// Working precision used for the integral; 53 means the double-precision route sufficed.
    pub bits: u32,
}

/// Main term split into its two parts with every contribution kept.
#[derive(Clone, Debug)]
pub struct TermBreakdown {
    pub query: AsymptoticQuery,
    pub mu_part: Float,
    pub mordell_part: Float,
    /// Imaginary part accumulated alongside; zero up to rounding.
    pub imag_part: Float,
    pub mu_terms: Vec<MuTerm>,
    pub mordell_terms: Vec<MordellTerm>,
    pub dropped_terms: usize,
}

impl TermBreakdown {
    pub fn total(&self) -> Float {
        Float::with_val(self.mu_part.prec(), &self.mu_part + &self.mordell_part)
    }

    pub fn total_f64(&self) -> f64 {
        self.total().to_f64()
    }

    /// `|exact − main|/exact`, computed at working precision.
    pub fn relative_error(&self, exact: &BigInt) -> f64 {
        let prec = self.mu_part.prec();
        let e = big(exact, prec);
        let d = Float::with_val(prec, &e - self.total()).abs();
        (d / e.abs()).to_f64()
    }
}

/// `(a, b, c) ≥ 0` with `2a + 2b + 2c = r`.
pub(crate) fn mu_triples(r: u32) -> Vec<(u32, u32, u32)> {
    let h = r / 2;
    let mut out = Vec::new();
    for a in 0..=h {
        for b in 0..=h - a {
            out.push((a, b, h - a - b));
        }
    }
    out
}

/// `(a, b, c) ≥ 0` with `2a + 2b + 1 + c = r`.
pub(crate) fn mordell_triples(r: u32) -> Vec<(u32, u32, u32)> {
    let mut out = Vec::new();
    for a in 0..=r / 2 {
        for b in 0..=r / 2 {
            if 2 * a + 2 * b < r {
                out.push((a, b, r - 1 - 2 * a - 2 * b));
            }
        }
    }
    out
}

/// `β = 1/12 − γ²(ϱ² + T²/4 − |ϱ|T)/T³ = 1/12 − γ²(T − 2|ϱ|)²/(4T³)`
pub fn mordell_beta(t_mod: i64, gamma_gcd: i64, varrho: i64) -> Ratio<i128> {
    let (t, g, d) = (t_mod as i128, gamma_gcd as i128, (t_mod - 2 * varrho.abs()) as i128);
    Ratio::new(1, 12) - Ratio::new(g * g * d * d, 4 * t * t * t)
}

/// The `k`-th block of the μ-part: `2π(K_k(n)/k) Σ κ(a,b,c)(kT)^a(24n−1)^{−3/4+a/2+c} I_{−3/2+a+2c}(π√(24n−1)/(6k))`.
fn mu_block(q: &AsymptoticQuery, k: u32, prec: u32) -> (MpComplex, Vec<MuTerm>) {
    let kv = kloosterman_k(k as i64, q.n as i64);
    let mut kk = MpComplex::zero(prec);
    for (_, u) in &kv.terms {
        kk += &scaled_unit(u, prec);
    }
    let base = Float::with_val(prec, 24 * q.n - 1);
    let x = Float::with_val(prec, base.sqrt_ref()) * pi(prec) / (6 * k);
    let two_pi_over_k = pi(prec) * 2u32 / k;
    let mut sum = Float::with_val(prec, 0);
    let mut terms = Vec::new();
    for (a, b, c) in mu_triples(q.r) {
        let kap = kappa_value(&kappa(a as i32, b as i32, c as i32), prec);
        let kt = Float::with_val(prec, k as u64 * q.t_mod as u64).pow(a);
        let p = pow_ratio(&base, -3 + 2 * a as i64 + 4 * c as i64, 4);
        let bes = specfun::mp::bessel_i(-3 + 2 * a as i32 + 4 * c as i32, &x);
        let v = kap * kt * p * bes;
        terms.push(MuTerm { k, a, b, c, value: (Float::with_val(prec, &v * &kk.re) * &two_pi_over_k).to_f64() });
        sum += v;
    }
    (kk.scale(&(sum * two_pi_over_k)), terms)
}

struct MordellTask {
    k: u32,
    t: i64,
    varrho: i64,
    l: u32,
}

/// Main term of the asymptotic expansion at `q.n` with `k ≤ k_cap`, at `prec` bits.
pub fn theorem_a_main(q: &AsymptoticQuery, prec: u32) -> Result<TermBreakdown, AsympError> {
    let blocks: Vec<(MpComplex, Vec<MuTerm>)> = (1..=q.k_cap).into_par_iter().map(|k| mu_block(q, k, prec)).collect();
    let mut mu = MpComplex::zero(prec);
    let mut mu_terms = Vec::new();
    for (v, t) in blocks {
        mu += &v;
        mu_terms.extend(t);
    }

    let tm = q.t_mod as i64;
    let half = (tm - 1) / 2;
    let mut tasks = Vec::new();
    let mut dropped = 0;
    for k in 1..=q.k_cap {
        let g = tm.gcd(&(k as i64));
        let kr = k as i64 / g;
        for t in (-half..=half).filter(|&t| t != 0) {
            for varrho in -half..=half {
                if mordell_beta(tm, g, varrho) <= Ratio::from_integer(0) {
                    dropped += kr as usize;
                    continue;
                }
                for l in 0..kr {
                    tasks.push(MordellTask { k, t, varrho, l: l as u32 });
                }
            }
        }
    }
    // scale of the whole main term sets how much precision each Mordell term needs
    let scale = mu.re.to_f64().abs().max(f64::MIN_POSITIVE);
    let results: Vec<Result<(MpComplex, Vec<MordellTerm>), AsympError>> =
        tasks.par_iter().map(|task| mordell_task(q, task, prec, scale)).collect();
    let mut mordell = MpComplex::zero(prec);
    let mut mordell_terms = Vec::new();
    for r in results {
        let (v, terms) = r?;
        mordell += &v;
        mordell_terms.extend(terms);
    }

    let total = &mu + &mordell;
    let (re, im) = (total.re.to_f64(), total.im.to_f64());
    if im.abs() > IMAG_TOLERANCE * re.abs() {
        return Err(AsympError::ImaginaryResidue { real: re, imag: im });
    }
    Ok(TermBreakdown {
        query: *q,
        mu_part: mu.re,
        mordell_part: mordell.re,
        imag_part: total.im,
        mu_terms,
        mordell_terms,
        dropped_terms: dropped,
    })
}

fn mordell_task(
    q: &AsymptoticQuery,
    task: &MordellTask,
    prec: u32,
    scale: f64,
) -> Result<(MpComplex, Vec<MordellTerm>), AsympError> {
    let tm = q.t_mod as i64;
    let k = task.k as i64;
    let g = tm.gcd(&k);
    let (gc, kr) = (tm / g, k / g);
    let partial = kloosterman_partial(tm, task.t, task.varrho, task.l as i64, k, q.n as i64)?;
    if partial.terms.is_empty() {
        return Ok((MpComplex::zero(prec), Vec::new()));
    }
    let beta = mordell_beta(tm, g, task.varrho);
    let al = alpha(tm, task.t, task.l as i64, kr)?;
    let to_f = |x: Ratio<i128>| *x.numer() as f64 / *x.denom() as f64;
    let mut sum = MpComplex::zero(prec);
    let mut terms = Vec::new();
    let kp_f64 = partial.value;
    for (a, b, c) in mordell_triples(q.r) {
        let params = IntegralParams {
            t_mod: q.t_mod,
            alpha: to_f(al),
            beta: to_f(beta),
            delta: -1.0 / 12.0,
            varrho: task.varrho as f64 / tm as f64,
            c,
            two_d: -1 - 2 * a as i32 - 2 * c as i32,
            k: task.k,
            n: q.n,
            gamma_co: gc as u32,
        };
        let kap = kappa_h(a as i32, b as i32, c as i32);
        let coeff = |prec: u32| -> Float {
            let (a2, c2) = (2 * a as i64, 2 * c as i64);
            let two_n = Float::with_val(prec, 24 * q.n - 1) / 12u32;
            kappa_value(&kap, prec)
                * pow_ratio(&Float::with_val(prec, k), a2 - 1, 2)
                * pow_ratio(&Float::with_val(prec, tm), a2 - 1, 2)
                * pow_ratio(&Float::with_val(prec, g), c2 + 1, 2)
                * pow_ratio(&two_n, a2 + c2 - 1, 4)
                * pow_ratio(&ratio(&beta, prec), 3 - a2 - c2, 4)
                * pi(prec)
                * 2u32
                / k
        };
        // double-precision estimate decides the working precision of this term
        let approx = bessel_integral_i(&params)? * kp_f64 * coeff(64).to_f64();
        let rel = approx.norm() / scale;
        let needed = prec as f64 + rel.max(f64::MIN_POSITIVE).log2() + 48.0;
        let (value, bits) = if needed <= 40.0 {
            (crate::convert::complex(approx, prec), 53)
        } else {
            let work = (needed.ceil() as u32).clamp(64, prec);
            let shape = IntegralShape {
                alpha: ratio(&al, work),
                beta: ratio(&beta, work),
                delta: mpfloat::from_ratio(work, -1, 12),
                varrho: mpfloat::from_ratio(work, task.varrho as i128, tm as i128),
            };
            let integral = bessel_integral_i_shaped(&params, &shape)?;
            let mut kp = MpComplex::zero(work);
            for (_, u) in &partial.terms {
                kp += &scaled_unit(u, work);
            }
            let v = (&kp * &integral).scale(&coeff(work));
            (MpComplex::new(Float::with_val(prec, &v.re), Float::with_val(prec, &v.im)), work)
        };
        terms.push(MordellTerm {
            gamma_gcd: g as u32,
            t: task.t,
            varrho: task.varrho,
            k: task.k,
            l: task.l,
            a,
            b,
            c,
            value: [value.re.to_f64(), value.im.to_f64()],
            bits,
        });
        sum += &value;
    }
    Ok((sum, terms))
}
