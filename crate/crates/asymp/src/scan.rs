use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::theorem_a::theorem_a_main;
use crate::theorem_b::theorem_b_leading;
use crate::{check_t, AsympError, AsymptoticQuery};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GarvanReport {
    pub t_mod: u32,
    pub r: u32,
    pub n_lo: usize,
    pub n_hi: usize,
    /// Every `n` in range with `m_{T−2}^r(n) ≤ m_T^r(n)`.
    pub violations: Vec<usize>,
    /// Smallest `n ≥ n_lo` from which the inequality holds through `n_hi`.
    pub n0: Option<usize>,
}

/// Exact check of `m_{T−2}^r(n) > m_T^r(n)` on `[n_lo, n_hi]`.
pub fn garvan_scan(t_mod: u32, r: u32, n_lo: usize, n_hi: usize) -> Result<GarvanReport, AsympError> {
    check_t(t_mod)?;
    if t_mod < 3 {
        return Err(AsympError::InvalidT(t_mod));
    }
    if r % 2 == 1 || r == 0 {
        return Err(AsympError::InvalidR(r));
    }
    let lower = qexact::moment_table(t_mod as i64 - 2, r, n_hi)?;
    let upper = qexact::moment_table(t_mod as i64, r, n_hi)?;
    let violations: Vec<usize> = (n_lo..=n_hi).filter(|&n| lower.value(n) <= upper.value(n)).collect();
    let n0 = match violations.last() {
        None => Some(n_lo),
        Some(&v) if v < n_hi => Some(v + 1),
        Some(_) => None,
    };
    Ok(GarvanReport { t_mod, r, n_lo, n_hi, violations, n0 })
}

/// One row of `T,r,n,exact,thmA_main,thmB_leading,rel_err_A,rel_err_B`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ComparisonRow {
    #[serde(rename = "T")]
    pub t_mod: u32,
    pub r: u32,
    pub n: u64,
    pub exact: String,
    #[serde(rename = "thmA_main")]
    pub thm_a_main: f64,
    #[serde(rename = "thmB_leading")]
    pub thm_b_leading: f64,
    #[serde(rename = "rel_err_A")]
    pub rel_err_a: f64,
    #[serde(rename = "rel_err_B")]
    pub rel_err_b: f64,
}

/// Exact moments against both asymptotic formulas at each `n`.
pub fn comparison_rows(t_mod: u32, r: u32, ns: &[u64], prec: u32) -> Result<Vec<ComparisonRow>, AsympError> {
    let n_max = ns.iter().copied().max().unwrap_or(1) as usize;
    let table = qexact::moment_table(t_mod as i64, r, n_max)?;
    ns.iter()
        .map(|&n| {
            let q = AsymptoticQuery::new(t_mod, r, n)?;
            let exact: &BigInt = table.value(n as usize);
            let main = theorem_a_main(&q, prec)?;
            let b = theorem_b_leading(r, n);
            let ex = exact.to_f64().unwrap_or(f64::INFINITY);
            Ok(ComparisonRow {
                t_mod,
                r,
                n,
                exact: exact.to_string(),
                thm_a_main: main.total_f64(),
                thm_b_leading: b,
                rel_err_a: main.relative_error(exact),
                rel_err_b: ((ex - b) / ex).abs(),
            })
        })
        .collect()
}
