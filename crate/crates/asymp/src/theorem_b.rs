use std::f64::consts::PI;

use num_traits::ToPrimitive;
use specfun::bernoulli_half;

fn b_half(j: u32) -> f64 {
    bernoulli_half(j as usize).to_f64().unwrap_or(f64::NAN)
}

fn sign(even: bool) -> f64 {
    if even {
        1.0
    } else {
        -1.0
    }
}

/// `2√3 (−1)^{r/2} B_r(1/2) (24n)^{r/2−1} e^{π√(2n/3)}`; the leading term does not depend on `T`.
///
/// ```
/// let v = asymp::theorem_b_leading(2, 100);
/// let want = 3f64.sqrt() / 6.0 * (std::f64::consts::PI * (200.0f64 / 3.0).sqrt()).exp();
/// assert!((v / want - 1.0).abs() < 1e-14);
/// ```
pub fn theorem_b_leading(r: u32, n: u64) -> f64 {
    let nf = n as f64;
    2.0 * 3f64.sqrt()
        * sign((r / 2) % 2 == 0)
        * b_half(r)
        * (24.0 * nf).powf(r as f64 / 2.0 - 1.0)
        * (PI * (2.0 * nf / 3.0).sqrt()).exp()
}

/// `√3 · r!/(r−2)! · (−1)^{r/2+1} B_{r−2}(1/2) (24n)^{r/2−3/2} e^{π√(2n/3)}`, the leading
/// term of `m_{T−2}^r(n) − m_T^r(n)` as stated.
///
/// Exact differences approach `1/π` times this value: the `a = 1` coefficients
/// `κ(1, b, c)` carry a factor `π^{−1}` that the closed form drops. The sign, and
/// therefore the inequality, is unaffected.
pub fn theorem_b_difference_leading(r: u32, n: u64) -> f64 {
    let nf = n as f64;
    let rf = r as f64;
    3f64.sqrt()
        * rf
        * (rf - 1.0)
        * sign((r / 2 + 1) % 2 == 0)
        * b_half(r - 2)
        * (24.0 * nf).powf(rf / 2.0 - 1.5)
        * (PI * (2.0 * nf / 3.0).sqrt()).exp()
}
