use num_bigint::{BigInt, BigUint};
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{dot_binom, q_class_checked, ClosedError};

/// b_0, …, b_n with Σ_{k≤m} (-1)^k b_k C(m,k)_d = 0 for m ≥ 1, and the
/// Möbius values μ(0, dot_m) = (-1)^m b_m.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MobiusSequence {
    pub q: u64,
    #[serde(with = "crate::bigstr::vec")]
    pub b: Vec<BigInt>,
    #[serde(with = "crate::bigstr::vec")]
    pub mu: Vec<BigInt>,
}

fn sign(k: usize) -> BigInt {
    if k % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

pub fn mobius_sequence(q: u64, n: usize) -> Result<MobiusSequence, ClosedError> {
    q_class_checked(q)?;
    let mut b = vec![BigInt::one()];
    for m in 1..=n {
        let mut partial = BigInt::zero();
        for (k, bk) in b.iter().enumerate() {
            partial += sign(k) * bk * BigInt::from(dot_binom(q, m, k)?);
        }
        // (-1)^m b_m = -partial
        b.push(-partial * sign(m));
    }
    let mu = b.iter().enumerate().map(|(m, bm)| sign(m) * bm).collect();
    Ok(MobiusSequence { q, b, mu })
}

/// The value of C(n,k)_d at q = ±1 (q = 1 for q ≡ 1 mod 4, q = -1 for q ≡ 3),
/// which counts the symmetric k-subsets of Z/(n+1) avoiding 0.
pub fn limit_value(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let c = |a: usize, b: usize| binomial(BigUint::from(a), BigUint::from(b));
    match (n % 2, k % 2) {
        (1, 1) => c((n - 1) / 2, (k - 1) / 2),
        (1, 0) => c((n - 1) / 2, k / 2),
        (0, 0) => c(n / 2, k / 2),
        _ => BigUint::zero(),
    }
}

/// Gaussian binomial C(n,k)_q, the number of k-subspaces of GF(q)^n.
pub fn gaussian_binom(q: u64, n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let qb = BigUint::from(q);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..k {
        num *= qb.pow((n - i) as u32) - 1u32;
        den *= qb.pow((k - i) as u32) - 1u32;
    }
    num / den
}

/// |C(n,k)_d / C(n,k)_q − 1/2| < 2/q.
pub fn asymptotic_ratio_ok(q: u64, n: usize, k: usize) -> Result<bool, ClosedError> {
    let d = BigInt::from(dot_binom(q, n, k)?);
    let g = BigInt::from(gaussian_binom(q, n, k));
    let ratio = BigRational::new(d, g);
    let gap = (ratio - BigRational::new(1.into(), 2.into())).abs();
    Ok(gap < BigRational::new(2.into(), BigInt::from(q)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn mobius_examples() {
        for q in [3, 5, 7] {
            let s = mobius_sequence(q, 1).unwrap();
            assert_eq!(s.b, ints(&[1, 1]));
            assert_eq!(s.mu, ints(&[1, -1]));
        }
        let s = mobius_sequence(5, 2).unwrap();
        assert_eq!((s.b[2].clone(), s.mu[2].clone()), (1.into(), 1.into()));
        let s = mobius_sequence(3, 3).unwrap();
        assert_eq!((s.b[3].clone(), s.mu[3].clone()), (1.into(), (-1).into()));
    }

    #[test]
    fn mobius_recursion_is_satisfied() {
        for q in [3, 5, 7, 9, 11, 13] {
            let s = mobius_sequence(q, 8).unwrap();
            for m in 1..=8 {
                let total: BigInt = (0..=m)
                    .map(|k| sign(k) * &s.b[k] * BigInt::from(dot_binom(q, m, k).unwrap()))
                    .sum();
                assert!(total.is_zero());
            }
        }
    }

    #[test]
    fn limits() {
        assert_eq!(limit_value(5, 3), BigUint::from(2u32));
        assert_eq!(limit_value(4, 1), BigUint::zero());
        assert_eq!(limit_value(6, 2), BigUint::from(3u32));
    }

    #[test]
    fn gaussian() {
        assert_eq!(gaussian_binom(3, 4, 2), BigUint::from(130u32));
        assert_eq!(gaussian_binom(5, 3, 1), BigUint::from(31u32));
        assert_eq!(gaussian_binom(7, 3, 0), BigUint::one());
    }

    #[test]
    fn asymptotic_half() {
        for q in [101, 1009] {
            for n in 1..=6 {
                for k in 1..n {
                    assert!(asymptotic_ratio_ok(q, n, k).unwrap(), "q={q} n={n} k={k}");
                }
            }
        }
    }
}
