use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Bernoulli numbers `B_0 ..= B_max` with `B_1 = −1/2`.
pub fn bernoulli_numbers(max: usize) -> Vec<BigRational> {
    let mut b: Vec<BigRational> = Vec::with_capacity(max + 1);
    // Σ_{j=0}^{m} C(m+1, j) B_j = 0 for m ≥ 1
    let mut binom_row: Vec<BigInt> = vec![BigInt::one()];
    for m in 0..=max {
        // binom_row holds C(m+1, j) for j = 0..=m+1
        let mut next = vec![BigInt::one(); m + 2];
        for j in 1..=m {
            next[j] = &binom_row[j - 1] + &binom_row[j];
        }
        binom_row = next;
        if m == 0 {
            b.push(BigRational::one());
            continue;
        }
        let mut acc = BigRational::zero();
        for (j, bj) in b.iter().enumerate() {
            acc += BigRational::from_integer(binom_row[j].clone()) * bj;
        }
        b.push(-acc / BigRational::from_integer(binom_row[m].clone()));
    }
    b
}

/// Exact `B_j(1/2) = (2^{1−j} − 1)·B_j`.
///
/// ```
/// use num_rational::BigRational;
/// let v = specfun::bernoulli_half(2);
/// assert_eq!(v, BigRational::new((-1).into(), 12.into()));
/// ```
pub fn bernoulli_half(j: usize) -> BigRational {
    let bj = bernoulli_numbers(j).pop().expect("non-empty");
    let factor = BigRational::new(BigInt::one(), BigInt::from(2).pow(j as u32)) * BigInt::from(2)
        - BigRational::one();
    factor * bj
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn first_bernoulli_numbers() {
        let b = bernoulli_numbers(8);
        assert_eq!(b[1], q(-1, 2));
        assert_eq!(b[2], q(1, 6));
        assert_eq!(b[4], q(-1, 30));
        assert_eq!(b[6], q(1, 42));
        assert_eq!(b[8], q(-1, 30));
        assert!(b[3].is_zero() && b[5].is_zero());
    }

    #[test]
    fn half_values() {
        assert_eq!(bernoulli_half(0), q(1, 1));
        // B_4(x) = x⁴ − 2x³ + x² − 1/30
        assert_eq!(bernoulli_half(4), q(7, 240));
        for j in (1..=15).step_by(2) {
            assert!(bernoulli_half(j).is_zero());
        }
    }
}
