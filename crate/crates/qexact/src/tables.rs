use num_bigint::BigInt;
use num_traits::{Pow, Zero};

use crate::series::PowerSeries;
use crate::{check_t, QError};

/// Exact `N_T(m, n)` for `|m| <= n <= n_max`.
#[derive(Clone, Debug)]
pub struct RankCountTable {
    t: u64,
    n_max: usize,
    // rows[|m|][n]
    rows: Vec<Vec<BigInt>>,
}

impl RankCountTable {
    pub fn t(&self) -> u64 {
        self.t
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    /// `N_T(m, n)`; zero outside the support `|m| <= n`.
    ///
    /// # Panics
    /// Panics if `n > n_max`.
    pub fn get(&self, m: i64, n: usize) -> BigInt {
        assert!(n <= self.n_max, "n = {n} beyond table order {}", self.n_max);
        let a = m.unsigned_abs() as usize;
        if a > self.n_max {
            return BigInt::zero();
        }
        self.rows[a][n].clone()
    }

    /// `Σ_m N_T(m, n)`.
    pub fn row_sum(&self, n: usize) -> BigInt {
        let mut s = self.rows[0][n].clone();
        for row in &self.rows[1..] {
            s += &row[n] * 2;
        }
        s
    }
}

/// `Σ_{j≥1} (−1)^{j−1} q^{j(Tj−1)/2 + m j}(1 − q^j)`, the numerator of the `m`-th count series.
fn theta_numerator(t: u64, m: u64, n_max: usize, weight: &BigInt, acc: &mut [BigInt]) {
    let mut j = 1u64;
    loop {
        let e = (j * (t * j - 1) / 2 + m * j) as usize;
        if e > n_max {
            break;
        }
        let odd = j % 2 == 1;
        if odd {
            acc[e] += weight;
        } else {
            acc[e] -= weight;
        }
        let e2 = e + j as usize;
        if e2 <= n_max {
            if odd {
                acc[e2] -= weight;
            } else {
                acc[e2] += weight;
            }
        }
        j += 1;
    }
}

/// Expands the defining series of `N_T(m, n)` for every `m`.
///
/// ```
/// let table = qexact::rank_count_table(3, 4).unwrap();
/// assert_eq!(table.get(0, 1), 1.into());
/// assert_eq!(table.row_sum(4), 5.into());
/// ```
pub fn rank_count_table(t: i64, n_max: usize) -> Result<RankCountTable, QError> {
    let t = check_t(t)?;
    let one = BigInt::from(1);
    let rows = (0..=n_max as u64)
        .map(|m| {
            let mut num = vec![BigInt::zero(); n_max + 1];
            theta_numerator(t, m, n_max, &one, &mut num);
            PowerSeries::from_coeffs(num).divide_by_euler().into_coeffs()
        })
        .collect();
    Ok(RankCountTable { t, n_max, rows })
}

/// Exact moments `m_T^r(n)` for `0 <= n <= n_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentTable {
    t: u64,
    r: u32,
    values: Vec<BigInt>,
}

impl MomentTable {
    pub fn t(&self) -> u64 {
        self.t
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn n_max(&self) -> usize {
        self.values.len() - 1
    }

    pub fn value(&self, n: usize) -> &BigInt {
        &self.values[n]
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }
}

/// Computes `m_T^r(n) = Σ_m m^r N_T(m, n)` without materialising the count table.
///
/// The `m`-weighted numerators are accumulated into one series (O(n_max^{3/2}) terms)
/// and divided once by `(q)_∞`.
///
/// ```
/// let t = qexact::moment_table(1, 2, 5).unwrap();
/// assert_eq!(t.value(1), &2.into());
/// ```
pub fn moment_table(t: i64, r: u32, n_max: usize) -> Result<MomentTable, QError> {
    let t = check_t(t)?;
    let mut num = vec![BigInt::zero(); n_max + 1];
    if r % 2 == 0 {
        if r == 0 {
            theta_numerator(t, 0, n_max, &BigInt::from(1), &mut num);
        }
        for m in 1..=n_max as u64 {
            let w = BigInt::from(m).pow(r) * 2;
            theta_numerator(t, m, n_max, &w, &mut num);
        }
    }
    let values = PowerSeries::from_coeffs(num).divide_by_euler().into_coeffs();
    Ok(MomentTable { t, r, values })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn crank_row_one_has_negative_center() {
        let table = rank_count_table(1, 3).unwrap();
        assert_eq!(table.get(0, 1), BigInt::from(-1));
        assert_eq!(table.get(1, 1), BigInt::from(1));
        assert_eq!(table.get(-1, 1), BigInt::from(1));
    }

    #[test]
    fn moment_table_matches_count_table() {
        for t in [1, 3, 5, 7] {
            let counts = rank_count_table(t, 30).unwrap();
            for r in [0u32, 2, 4] {
                let mt = moment_table(t, r, 30).unwrap();
                for n in 0..=30 {
                    let mut s = BigInt::zero();
                    for m in -(n as i64)..=(n as i64) {
                        s += counts.get(m, n) * BigInt::from(m).pow(r);
                    }
                    assert_eq!(&s, mt.value(n), "T={t} r={r} n={n}");
                }
            }
        }
    }

    #[test]
    fn rejects_even_t() {
        assert_eq!(moment_table(4, 2, 5).unwrap_err(), QError::InvalidT(4));
        assert_eq!(rank_count_table(0, 5).unwrap_err(), QError::InvalidT(0));
    }
}
