use num_bigint::BigInt;

use crate::QError;

/// Largest `n` accepted by [`spt_oracle`].
pub const SPT_ORACLE_LIMIT: u64 = 90;

/// Total number of smallest parts over all partitions of `n`, by enumeration.
///
/// Partitions are walked in reverse lexicographic order (ZS1) over an explicit
/// part stack, so no q-series identity is involved. Cost grows like `p(n)`.
///
/// ```
/// assert_eq!(qexact::spt_oracle(4).unwrap(), 10.into());
/// assert_eq!(qexact::spt_oracle(5).unwrap(), 14.into());
/// ```
pub fn spt_oracle(n: u64) -> Result<BigInt, QError> {
    if n == 0 {
        return Err(QError::NonPositive);
    }
    if n > SPT_ORACLE_LIMIT {
        return Err(QError::TooLarge {
            n,
            limit: SPT_ORACLE_LIMIT,
        });
    }
    let n = n as usize;
    // parts[0..len] is non-increasing; parts[h] is the last part larger than 1
    let mut parts = vec![1usize; n + 1];
    parts[0] = n;
    let mut len = 1usize;
    let mut h = 0usize;
    let mut total: u128 = smallest_multiplicity(&parts[..len]) as u128;
    while parts[0] != 1 {
        if parts[h] == 2 {
            len += 1;
            parts[h] = 1;
            h = h.wrapping_sub(1);
        } else {
            let r = parts[h] - 1;
            let mut t = len - h;
            parts[h] = r;
            while t >= r {
                h += 1;
                parts[h] = r;
                t -= r;
            }
            if t == 0 {
                len = h + 1;
            } else {
                len = h + 2;
                if t > 1 {
                    h += 1;
                    parts[h] = t;
                }
            }
        }
        total += smallest_multiplicity(&parts[..len]) as u128;
    }
    Ok(BigInt::from(total))
}

fn smallest_multiplicity(parts: &[usize]) -> usize {
    let last = parts[parts.len() - 1];
    parts.iter().rev().take_while(|&&p| p == last).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        let expected = [1u32, 3, 5, 10, 14, 26, 35, 57, 80, 119];
        for (i, e) in expected.iter().enumerate() {
            assert_eq!(spt_oracle(i as u64 + 1).unwrap(), BigInt::from(*e));
        }
    }

    #[test]
    fn guards() {
        assert_eq!(spt_oracle(0), Err(QError::NonPositive));
        assert!(matches!(spt_oracle(201), Err(QError::TooLarge { .. })));
    }
}
