use num_complex::Complex64;

use crate::MockError;

const REL_CUTOFF: f64 = 1e-18;
const MAX_TERMS: i64 = 200_000;

/// `Σ_{n∈ℤ} f(n)` summed outward from `center` in both directions.
///
/// Each direction stops after three consecutive terms fall below
/// `1e−18 · (largest partial-sum magnitude)`.
pub(crate) fn bilateral(center: i64, f: impl Fn(i64) -> Complex64) -> Result<Complex64, MockError> {
    let mut sum = f(center);
    let mut scale = sum.norm();
    for dir in [1i64, -1] {
        let mut small = 0;
        let mut j = 1;
        while small < 3 {
            if j > MAX_TERMS {
                return Err(MockError::Unconverged("bilateral series".into()));
            }
            let term = f(center + dir * j);
            sum += term;
            scale = scale.max(sum.norm());
            if term.norm() <= REL_CUTOFF * scale {
                small += 1;
            } else {
                small = 0;
            }
            j += 1;
        }
    }
    if !sum.re.is_finite() || !sum.im.is_finite() {
        return Err(MockError::Unconverged("non-finite series value".into()));
    }
    Ok(sum)
}

/// `e^{a}/(1 − e^{d})`, rewritten as `−e^{a−d}/(1 − e^{−d})` when `|e^d| > 1`.
pub(crate) fn geometric_quotient(a: Complex64, d: Complex64) -> Complex64 {
    if d.re > 0.0 {
        -(a - d).exp() / (1.0 - (-d).exp())
    } else {
        a.exp() / (1.0 - d.exp())
    }
}

/// Distance from `w` to the lattice `ℤ + τℤ`.
pub fn lattice_distance(w: Complex64, tau: Complex64) -> f64 {
    let m0 = (w.im / tau.im).round() as i64;
    let mut best = f64::INFINITY;
    for m in m0 - 1..=m0 + 1 {
        let shifted = w - tau * m as f64;
        let n = shifted.re.round();
        for dn in [-1.0, 0.0, 1.0] {
            best = best.min((shifted - (n + dn)).norm());
        }
    }
    best
}
