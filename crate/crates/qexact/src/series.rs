use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::QError;

/// Truncated power series in `q` with exact integer coefficients.
///
/// Holds coefficients of `q^0 ..= q^{n_max}`; products drop every higher power.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<BigInt>,
}

impl PowerSeries {
    pub fn zero(n_max: usize) -> Self {
        PowerSeries {
            coeffs: vec![BigInt::zero(); n_max + 1],
        }
    }

    pub fn one(n_max: usize) -> Self {
        let mut s = Self::zero(n_max);
        s.coeffs[0] = BigInt::one();
        s
    }

    /// Builds a series from coefficients; the truncation order is `coeffs.len() - 1`.
    ///
    /// # Panics
    /// Panics on an empty coefficient vector.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the constant term");
        PowerSeries { coeffs }
    }

    pub fn n_max(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> &BigInt {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    fn same_order(&self, other: &Self) -> Result<(), QError> {
        if self.n_max() == other.n_max() {
            Ok(())
        } else {
            Err(QError::OrderMismatch(self.n_max(), other.n_max()))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, QError> {
        self.same_order(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(PowerSeries { coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, QError> {
        self.same_order(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(PowerSeries { coeffs })
    }

    pub fn mul(&self, other: &Self) -> Result<Self, QError> {
        self.same_order(other)?;
        let n = self.n_max();
        let mut out = vec![BigInt::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Ok(PowerSeries { coeffs: out })
    }

    /// Multiplicative inverse; requires a constant term of ±1 so the result stays integral.
    pub fn inverse(&self) -> Result<Self, QError> {
        let c0 = &self.coeffs[0];
        if c0.abs() != BigInt::one() {
            return Err(QError::NotUnit(c0.to_string()));
        }
        let n = self.n_max();
        let mut out = vec![BigInt::zero(); n + 1];
        out[0] = c0.clone();
        for k in 1..=n {
            let mut acc = BigInt::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc += &self.coeffs[j] * &out[k - j];
                }
            }
            // c0 = ±1, so dividing by c0 is multiplying by c0
            out[k] = -(acc * c0);
        }
        Ok(PowerSeries { coeffs: out })
    }

    /// Divides by `(q;q)_∞` with the pentagonal-number recurrence.
    pub fn divide_by_euler(&self) -> Self {
        let n = self.n_max();
        let pent = pentagonal_terms(n);
        let mut out: Vec<BigInt> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = self.coeffs[k].clone();
            for &(g, sign) in &pent {
                if g > k {
                    break;
                }
                // (q)_∞ = Σ sign·q^g, and the g = 0 term is the identity
                if sign > 0 {
                    acc -= &out[k - g];
                } else {
                    acc += &out[k - g];
                }
            }
            out.push(acc);
        }
        PowerSeries { coeffs: out }
    }
}

/// Nonzero exponents of Euler's pentagonal series with their signs, ascending.
pub(crate) fn pentagonal_terms(n_max: usize) -> Vec<(usize, i8)> {
    let mut out = Vec::new();
    let mut j = 1usize;
    loop {
        let g1 = j * (3 * j - 1) / 2;
        if g1 > n_max {
            break;
        }
        let sign = if j % 2 == 1 { -1 } else { 1 };
        out.push((g1, sign));
        let g2 = j * (3 * j + 1) / 2;
        if g2 <= n_max {
            out.push((g2, sign));
        }
        j += 1;
    }
    out
}

/// `(q;q)_∞` truncated at `q^{n_max}`.
pub fn euler_series(n_max: usize) -> PowerSeries {
    let mut s = PowerSeries::one(n_max);
    for (g, sign) in pentagonal_terms(n_max) {
        s.coeffs[g] = BigInt::from(sign);
    }
    s
}

/// `1/(q;q)_∞`, whose coefficients are the partition numbers.
///
/// ```
/// let p = qexact::partition_series(9);
/// assert_eq!(p.coeff(4), &5.into());
/// assert_eq!(p.coeff(9), &30.into());
/// ```
pub fn partition_series(n_max: usize) -> PowerSeries {
    PowerSeries::one(n_max).divide_by_euler()
}

pub fn partition_numbers(n_max: usize) -> Vec<BigInt> {
    partition_series(n_max).into_coeffs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn euler_times_partitions_is_one() {
        let n = 80;
        let prod = euler_series(n).mul(&partition_series(n)).unwrap();
        assert_eq!(prod, PowerSeries::one(n));
    }

    #[test]
    fn generic_inverse_agrees_with_pentagonal_division() {
        let n = 60;
        assert_eq!(euler_series(n).inverse().unwrap(), partition_series(n));
    }

    #[test]
    fn inverse_rejects_non_units() {
        let s = PowerSeries::from_coeffs(vec![BigInt::from(2), BigInt::from(1)]);
        assert!(matches!(s.inverse(), Err(QError::NotUnit(_))));
    }

    #[test]
    fn order_mismatch_is_reported() {
        let a = PowerSeries::one(3);
        let b = PowerSeries::one(4);
        assert_eq!(a.add(&b), Err(QError::OrderMismatch(3, 4)));
    }
}
