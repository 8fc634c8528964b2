use super::OracleError;

/// Largest n accepted by [`count_symmetric_ksets`].
pub const MAX_KSET_N: usize = 24;

/// Number of k-subsets A of Z/(n+1) with 0 ∉ A and A = −A, by scanning every
/// subset of {1, …, n}.
pub fn count_symmetric_ksets(n: usize, k: usize) -> Result<u64, OracleError> {
    if n > MAX_KSET_N {
        return Err(OracleError::KsetRangeTooLarge { n, max: MAX_KSET_N });
    }
    let m = n + 1;
    // bit i stands for the residue i + 1
    let negate = |mask: u32| -> u32 {
        let mut out = 0;
        for i in 0..n {
            if mask >> i & 1 == 1 {
                let neg = m - (i + 1);
                out |= 1 << (neg - 1);
            }
        }
        out
    };
    Ok((0u32..1 << n)
        .filter(|&mask| mask.count_ones() as usize == k && negate(mask) == mask)
        .count() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(count_symmetric_ksets(5, 3).unwrap(), 2);
        assert_eq!(count_symmetric_ksets(4, 1).unwrap(), 0);
        assert_eq!(count_symmetric_ksets(6, 2).unwrap(), 3);
        assert_eq!(count_symmetric_ksets(6, 0).unwrap(), 1);
    }

    #[test]
    fn rejects_large_n() {
        assert!(count_symmetric_ksets(25, 2).is_err());
    }
}
