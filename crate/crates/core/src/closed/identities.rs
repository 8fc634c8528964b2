use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::{
    bracket, bracket_factorial, dot_binom, dot_binom_variant, q_class_checked, ClosedError,
    LineFlavor, Variant,
};
use crate::gf::QClass;

/// C(n, 0)_d, …, C(n, n)_d.
pub fn pascal_row(q: u64, n: usize) -> Result<Vec<BigUint>, ClosedError> {
    (0..=n).map(|k| dot_binom(q, n, k)).collect()
}

fn rat(x: BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// Checks, for 0 < k < n,
/// C(n,k) = C(n-1,k-1) + ([n]-[k])/[n-k] · C(n-1,k) and
/// C(n,k) = C(n-1,k) + ([n]-[n-k])/[k] · C(n-1,k-1)
/// in exact rational arithmetic.
pub fn pascal_check(q: u64, n: usize) -> Result<(), ClosedError> {
    let br = |m: usize| bracket(q, m, LineFlavor::SpacelikeInDot).map(rat);
    for k in 1..n {
        let c = rat(dot_binom(q, n, k)?);
        let up = rat(dot_binom(q, n - 1, k)?);
        let left = rat(dot_binom(q, n - 1, k - 1)?);
        let (bn, bk, bnk) = (br(n)?, br(k)?, br(n - k)?);
        let first = &left + (&bn - &bk) / &bnk * &up;
        if first != c {
            return Err(ClosedError::IdentityViolated {
                identity: "first Pascal identity",
                q,
                n,
                k,
            });
        }
        let second = &up + (&bn - &bnk) / &bk * &left;
        if second != c {
            return Err(ClosedError::IdentityViolated {
                identity: "second Pascal identity",
                q,
                n,
                k,
            });
        }
    }
    Ok(())
}

/// Shape of one integer sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowShape {
    pub symmetric: bool,
    /// Non-decreasing then non-increasing, with a maximum at ⌊m/2⌋ or ⌈m/2⌉
    /// where m + 1 is the row length.
    pub unimodal: bool,
    pub log_concave: bool,
    /// Index of the first maximum.
    pub peak: usize,
}

impl RowShape {
    pub fn holds(&self) -> bool {
        self.symmetric && self.unimodal && self.log_concave
    }
}

pub fn shape_of(row: &[BigUint]) -> RowShape {
    let len = row.len();
    let symmetric = row.iter().eq(row.iter().rev());
    let log_concave = (1..len.saturating_sub(1))
        .all(|i| &row[i] * &row[i] >= &row[i - 1] * &row[i + 1]);
    let mut i = 0;
    while i + 1 < len && row[i] <= row[i + 1] {
        i += 1;
    }
    let mut j = i;
    while j + 1 < len && row[j] >= row[j + 1] {
        j += 1;
    }
    let peak = (0..len)
        .find(|&p| row.iter().all(|x| x <= &row[p]))
        .unwrap_or(0);
    let m = len.saturating_sub(1);
    let centered = row.is_empty() || row[m / 2] == row[peak] || row[m.div_ceil(2)] == row[peak];
    RowShape {
        symmetric,
        unimodal: j + 1 >= len && centered,
        log_concave,
        peak,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShapeReport {
    pub q: u64,
    pub n: usize,
    /// C(n, 0)_d … C(n, n)_d.
    pub euclidean: RowShape,
    /// λdot-type k-subspaces of dot_n for k = 1..n-1.
    pub lorentzian: RowShape,
}

impl ShapeReport {
    pub fn holds(&self) -> bool {
        self.euclidean.holds() && self.lorentzian.holds()
    }
}

pub fn shape_checks(q: u64, n: usize) -> Result<ShapeReport, ClosedError> {
    let row = pascal_row(q, n)?;
    let lrow = (1..n)
        .map(|k| dot_binom_variant(q, n, k, Variant::DL))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ShapeReport {
        q,
        n,
        euclidean: shape_of(&row),
        lorentzian: shape_of(&lrow),
    })
}

/// |O(n, q)| = 2^n·[n]_d!.
pub fn group_order(q: u64, n: usize) -> Result<BigUint, ClosedError> {
    Ok(bracket_factorial(q, n)? << n)
}

/// |O(n)| = C(n,k)_d·|O(k)|·|O(n-k)|.
pub fn quotient_identity_check(q: u64, n: usize, k: usize) -> Result<bool, ClosedError> {
    if k > n {
        return Err(ClosedError::KOutOfRange { n, k });
    }
    Ok(group_order(q, n)? == dot_binom(q, n, k)? * group_order(q, k)? * group_order(q, n - k)?)
}

/// How the index in the printed orthogonal-group formulas is read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OgfReading {
    /// The formula for O(2n+1) or O(2n) is evaluated with n = ⌊dim/2⌋.
    HalfDimension,
    /// The formula's n is taken to be the dimension itself.
    Dimension,
}

fn half(x: i64) -> Option<i64> {
    (x % 2 == 0).then_some(x / 2)
}

fn qpow(q: u64, e: i64) -> Option<BigInt> {
    (e >= 0).then(|| BigInt::from(q).pow(e as u32))
}

/// The printed orthogonal-group order formulas, evaluated for `dim` under the given
/// reading. `None` when an exponent or a product bound is not a non-negative integer.
pub fn ogf_printed(q: u64, dim: usize, reading: OgfReading) -> Result<Option<BigInt>, ClosedError> {
    let class = q_class_checked(q)?;
    if dim == 0 {
        return Ok(None);
    }
    let n = match reading {
        OgfReading::HalfDimension => (dim / 2) as i64,
        OgfReading::Dimension => dim as i64,
    };
    let product = |lo: i64, hi: i64, base: i64, step: i64| -> Option<BigInt> {
        let mut acc = BigInt::one();
        for k in lo..=hi {
            acc *= qpow(q, base)? - qpow(q, step * k)?;
        }
        Some(acc)
    };
    let value = if dim % 2 == 1 {
        (|| {
            let lead = qpow(q, half(n - 1)?)?;
            let hi = half(n - 3)?;
            Some(BigInt::from(2) * lead * product(0, hi, 2 * n, 2)?)
        })()
    } else {
        (|| {
            let h = half(n)?;
            let corr = match class {
                QClass::OneMod4 => BigInt::from(-1),
                QClass::ThreeMod4 => BigInt::from(if half(n + 2)? % 2 == 0 { 1 } else { -1 }),
            };
            let factor = qpow(q, h)? + corr;
            Some(BigInt::from(2) * factor * product(1, half(n - 2)?, n, 2)?)
        })()
    };
    Ok(value)
}
