//! The dot-binomial coefficients as polynomials in q.
//!
//! For each congruence class of q modulo 4 and each (n, k), C(n,k)_d agrees at
//! every admissible q with a fixed polynomial p_{n,k}(q) of degree k(n−k), given
//! by a table of cells built from Gaussian binomials in q². This module builds
//! those cells exactly and checks their shape: degree, lowest term, coefficient
//! (anti)palindromy, the q ↦ 1/q functional equation and the value at q = ±1.

mod ratpoly;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::closed::{self, ClosedError};
use crate::gf::QClass;

pub use ratpoly::RatPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("k = {k} out of range for n = {n}")]
    KOutOfRange { n: usize, k: usize },
    #[error("{what} does not divide exactly")]
    ExactDivisionFailed { what: String },
    #[error("q = {q} is not in class {class}")]
    WrongClass { q: u64, class: QClass },
    #[error("p_{{{n},{k}}} at q = {q}: polynomial gives {poly}, closed form gives {closed}")]
    Mismatch {
        n: usize,
        k: usize,
        q: i64,
        poly: BigRational,
        closed: BigRational,
    },
    #[error("p_{{{n},{k}}} is neither palindromic nor anti-palindromic after removing q^{m}")]
    NeitherSign { n: usize, k: usize, m: usize },
    #[error("0 < k < n required, got n = {n}, k = {k}")]
    Interior { n: usize, k: usize },
    #[error(transparent)]
    Closed(#[from] ClosedError),
}

/// One cell of the polynomial tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PolyFamilyKey {
    pub q_class: QClass,
    pub n: usize,
    pub k: usize,
}

impl PolyFamilyKey {
    pub fn new(q_class: QClass, n: usize, k: usize) -> Result<Self, PolyError> {
        if k > n {
            return Err(PolyError::KOutOfRange { n, k });
        }
        Ok(PolyFamilyKey { q_class, n, k })
    }

    pub fn n_mod4(&self) -> usize {
        self.n % 4
    }

    pub fn k_mod4(&self) -> usize {
        self.k % 4
    }

    /// k(n−k), the degree of the cell.
    pub fn weight(&self) -> usize {
        self.k * (self.n - self.k)
    }

    fn interior(&self) -> Result<(), PolyError> {
        if self.k == 0 || self.k == self.n {
            return Err(PolyError::Interior {
                n: self.n,
                k: self.k,
            });
        }
        Ok(())
    }
}

/// +1 or −1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn from_bool(minus: bool) -> Self {
        if minus {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }
}

impl std::fmt::Display for Sign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// q^d + s.
fn q_pow_plus(d: usize, s: i64) -> RatPoly {
    &RatPoly::q_pow(d) + &RatPoly::from_int(s)
}

/// The Gaussian binomial C(n,k)_x as a polynomial in q, with x = q² when `squared`.
pub fn gaussian_binom_poly(n: usize, k: usize, squared: bool) -> Result<RatPoly, PolyError> {
    if k > n {
        return Err(PolyError::KOutOfRange { n, k });
    }
    let step = if squared { 2 } else { 1 };
    let mut num = RatPoly::one();
    let mut den = RatPoly::one();
    for i in 0..k {
        num = &num * &q_pow_plus(step * (n - i), -1);
        den = &den * &q_pow_plus(step * (k - i), -1);
    }
    num.exact_div(&den).ok_or_else(|| PolyError::ExactDivisionFailed {
        what: format!("Gaussian binomial ({n} {k})"),
    })
}

/// The table cell for `key`, expanded.
pub fn dot_binom_poly(key: PolyFamilyKey) -> Result<RatPoly, PolyError> {
    let PolyFamilyKey { q_class, n, k } = key;
    if k > n {
        return Err(PolyError::KOutOfRange { n, k });
    }
    let w = key.weight();
    let half = BigRational::new(BigInt::one(), BigInt::from(2));

    // Signs (s1, s2, s3) of the factors in each cell shape; see the match below.
    enum Cell {
        OddOdd(i64),
        OddEven(i64),
        EvenOdd(i64),
        EvenEven(i64, i64, i64),
    }
    let cell = match q_class {
        QClass::OneMod4 => match (n % 2, k % 2) {
            (1, 1) => Cell::OddOdd(1),
            (1, _) => Cell::OddEven(1),
            (_, 1) => Cell::EvenOdd(-1),
            _ => Cell::EvenEven(1, 1, 1),
        },
        QClass::ThreeMod4 => match (n % 4, k % 4) {
            (1, 1) | (3, 3) => Cell::OddOdd(1),
            (1, 3) | (3, 1) => Cell::OddOdd(-1),
            (1, 2) | (3, 2) => Cell::OddEven(-1),
            (1, _) | (3, _) => Cell::OddEven(1),
            (2, 1) | (2, 3) => Cell::EvenOdd(1),
            (_, 1) | (_, 3) => Cell::EvenOdd(-1),
            (2, 2) => Cell::EvenEven(1, -1, -1),
            (2, _) => Cell::EvenEven(-1, 1, -1),
            (_, 2) => Cell::EvenEven(-1, -1, 1),
            _ => Cell::EvenEven(1, 1, 1),
        },
    };

    let poly = match cell {
        // ½ q^{w/2} (q^{(n−k)/2} + s) C((n−1)/2, (k−1)/2)_{q²}
        Cell::OddOdd(s) => {
            &(&RatPoly::monomial(half, w / 2) * &q_pow_plus((n - k) / 2, s))
                * &gaussian_binom_poly((n - 1) / 2, (k - 1) / 2, true)?
        }
        // ½ q^{w/2} (q^{k/2} + s) C((n−1)/2, k/2)_{q²}
        Cell::OddEven(s) => {
            &(&RatPoly::monomial(half, w / 2) * &q_pow_plus(k / 2, s))
                * &gaussian_binom_poly((n - 1) / 2, k / 2, true)?
        }
        // ½ q^{(w−1)/2} (q^{n/2} + s) C((n−2)/2, (k−1)/2)_{q²}
        Cell::EvenOdd(s) => {
            &(&RatPoly::monomial(half, (w - 1) / 2) * &q_pow_plus(n / 2, s))
                * &gaussian_binom_poly((n - 2) / 2, (k - 1) / 2, true)?
        }
        // ½ q^{w/2} (q^{(n−k)/2} + s1)(q^{k/2} + s2) / (q^{n/2} + s3) · C(n/2, k/2)_{q²}
        Cell::EvenEven(s1, s2, s3) => {
            let num = &(&(&RatPoly::monomial(half, w / 2) * &q_pow_plus((n - k) / 2, s1))
                * &q_pow_plus(k / 2, s2))
                * &gaussian_binom_poly(n / 2, k / 2, true)?;
            num.exact_div(&q_pow_plus(n / 2, s3))
                .ok_or_else(|| PolyError::ExactDivisionFailed {
                    what: format!("table cell ({n} {k}) in class {q_class}"),
                })?
        }
    };
    Ok(poly)
}

/// Checks p_{n,k}(q) = C(n,k)_d at one admissible q and returns the common value.
pub fn eval_consistency(key: PolyFamilyKey, q: u64) -> Result<BigUint, PolyError> {
    let class = closed::q_class_checked(q)?;
    if class != key.q_class {
        return Err(PolyError::WrongClass {
            q,
            class: key.q_class,
        });
    }
    let value = dot_binom_poly(key)?.eval_int(q as i64);
    let exact = closed::dot_binom(q, key.n, key.k)?;
    let exact_rat = BigRational::from_integer(BigInt::from(exact.clone()));
    if value != exact_rat {
        return Err(PolyError::Mismatch {
            n: key.n,
            k: key.k,
            q: q as i64,
            poly: value,
            closed: exact_rat,
        });
    }
    Ok(exact)
}

pub fn degree_check(key: PolyFamilyKey) -> Result<bool, PolyError> {
    Ok(dot_binom_poly(key)?.degree() == Some(key.weight()))
}

/// Whether the lowest term is q^{(w−1)/2} (the `a_i` form) rather than q^{w/2}
/// (the `b_i` form), as stated for the polynomial shape.
pub fn stated_odd_shape(key: PolyFamilyKey) -> bool {
    key.n % 2 == 0 && key.k % 2 == 1
}

/// Stated exponent m of the lowest term.
pub fn stated_low_degree(key: PolyFamilyKey) -> usize {
    if stated_odd_shape(key) {
        (key.weight() - 1) / 2
    } else {
        key.weight() / 2
    }
}

/// How the unlabelled cases of the printed sign list are read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CaseReading {
    /// Cases after the one naming q ≡ 3 (mod 4) apply to that class only.
    ClassThreeOnly,
    /// Cases that do not name a class apply to both classes.
    BothClasses,
}

/// The sign in p(1/q) = ±q^{-3k(n−k)/2}·p(q) according to the printed case list.
pub fn printed_functional_sign(key: PolyFamilyKey, reading: CaseReading) -> Sign {
    let (n4, k4) = (key.n_mod4(), key.k_mod4());
    let class3 = key.q_class == QClass::ThreeMod4;
    let unlabelled_apply = class3 || reading == CaseReading::BothClasses;
    let minus = (key.q_class == QClass::OneMod4 && key.n % 2 == 0 && key.k % 2 == 1)
        || (class3 && n4 == 3 && matches!(k4, 1 | 2))
        || (unlabelled_apply
            && ((n4 == 1 && matches!(k4, 3 | 2))
                || (n4 == 2 && key.k % 2 == 0)
                || (n4 == 0 && key.k % 2 == 0)
                || (n4 == 0 && k4 == 3)));
    Sign::from_bool(minus)
}

/// Outcome of the q ↦ 1/q check for one cell.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctionalEquation {
    pub key: PolyFamilyKey,
    /// Sign ε with reverse(s) = ε·s for p = q^m·s.
    pub sign: Sign,
    /// Actual lowest exponent m.
    pub low_degree: usize,
    /// Whether m equals the stated lowest exponent.
    pub low_degree_as_stated: bool,
    /// Twice the exponent e in p(1/q) = ε·q^{-e}·p(q); e = 2m + deg s.
    pub twice_exponent: usize,
    /// Twice the printed exponent 3k(n−k)/2.
    pub twice_printed_exponent: usize,
    pub printed_sign_class_three_only: Sign,
    pub printed_sign_both_classes: Sign,
}

impl FunctionalEquation {
    pub fn exponent_as_printed(&self) -> bool {
        self.twice_exponent == self.twice_printed_exponent
    }
}

/// Palindromy sign of p / q^m via coefficient reversal.
fn depressed_sign(key: PolyFamilyKey, p: &RatPoly) -> Result<(RatPoly, usize, Sign), PolyError> {
    let m = p.low_degree().unwrap_or(0);
    let s = p.depress();
    let r = s.reverse();
    let sign = if r == s {
        Sign::Plus
    } else if r == -&s {
        Sign::Minus
    } else {
        return Err(PolyError::NeitherSign {
            n: key.n,
            k: key.k,
            m,
        });
    };
    Ok((s, m, sign))
}

pub fn functional_equation_check(key: PolyFamilyKey) -> Result<FunctionalEquation, PolyError> {
    key.interior()?;
    let p = dot_binom_poly(key)?;
    let (s, m, sign) = depressed_sign(key, &p)?;
    let d = s.degree().unwrap_or(0);
    Ok(FunctionalEquation {
        key,
        sign,
        low_degree: m,
        low_degree_as_stated: m == stated_low_degree(key),
        twice_exponent: 2 * (2 * m + d),
        twice_printed_exponent: 3 * key.weight(),
        printed_sign_class_three_only: printed_functional_sign(key, CaseReading::ClassThreeOnly),
        printed_sign_both_classes: printed_functional_sign(key, CaseReading::BothClasses),
    })
}

/// A printed coefficient-symmetry statement: sign and the index D in c_i = ±c_{D−i},
/// kept as twice its value because the printed D can be a half-integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrintedSymmetry {
    pub sign: Sign,
    pub twice_index: usize,
}

/// The printed coefficient-symmetry statement for a cell, if the case table covers it.
pub fn printed_symmetry(key: PolyFamilyKey) -> Option<PrintedSymmetry> {
    let w = key.weight();
    let (n4, k4) = (key.n_mod4(), key.k_mod4());
    let (n_odd, k_odd) = (key.n % 2 == 1, key.k % 2 == 1);
    let b = |sign| Some(PrintedSymmetry { sign, twice_index: w });
    let a = |sign| Some(PrintedSymmetry { sign, twice_index: w + 1 });
    match key.q_class {
        QClass::OneMod4 => {
            if !n_odd && k_odd {
                b(Sign::Minus)
            } else {
                b(Sign::Plus)
            }
        }
        QClass::ThreeMod4 => {
            if (n4 == 2 && k_odd) || (n4 == 0 && k4 == 1) {
                a(Sign::Plus)
            } else if n4 == 0 && k4 == 3 {
                a(Sign::Minus)
            } else if (n4 == 3 && matches!(k4, 3 | 0)) || (n4 == 1 && matches!(k4, 1 | 0)) {
                b(Sign::Plus)
            } else if (n4 == 3 && matches!(k4, 1 | 2))
                || (n4 == 1 && matches!(k4, 3 | 2))
                || (!n_odd && !k_odd)
            {
                b(Sign::Minus)
            } else {
                None
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetryReport {
    pub key: PolyFamilyKey,
    /// Coefficients of p / q^m, lowest first.
    #[serde(with = "crate::bigstr::vec")]
    pub depressed: Vec<BigRational>,
    /// Degree D of p / q^m, so the computed relation is c_i = ±c_{D−i}.
    pub depressed_degree: usize,
    pub sign: Sign,
    pub printed: Option<PrintedSymmetry>,
    /// The printed index is not an integer.
    pub printed_index_fractional: bool,
    /// The printed index differs from D.
    pub printed_index_conflict: bool,
    /// The printed sign differs from the computed one.
    pub printed_sign_conflict: bool,
}

pub fn coefficient_symmetry_report(key: PolyFamilyKey) -> Result<SymmetryReport, PolyError> {
    key.interior()?;
    let p = dot_binom_poly(key)?;
    let (s, _, sign) = depressed_sign(key, &p)?;
    let d = s.degree().unwrap_or(0);
    let printed = printed_symmetry(key);
    Ok(SymmetryReport {
        key,
        depressed: s.coeffs().to_vec(),
        depressed_degree: d,
        sign,
        printed,
        printed_index_fractional: printed.is_some_and(|p| p.twice_index % 2 == 1),
        printed_index_conflict: printed.is_some_and(|p| p.twice_index != 2 * d),
        printed_sign_conflict: printed.is_some_and(|p| p.sign != sign),
    })
}

/// p_{n,k}(±1) = C(n,k)_d limit value, with +1 for class 1 and −1 for class 3.
pub fn limit_check(key: PolyFamilyKey) -> Result<bool, PolyError> {
    let at = key.q_class.limit_point();
    let value = dot_binom_poly(key)?.eval_int(at);
    let want = BigRational::from_integer(BigInt::from(closed::limit_value(key.n, key.k)));
    Ok(value == want)
}

/// Every cell with n ≤ max_n, in (class, n, k) order.
pub fn all_keys(max_n: usize) -> Vec<PolyFamilyKey> {
    let mut keys = Vec::new();
    for q_class in [QClass::OneMod4, QClass::ThreeMod4] {
        for n in 0..=max_n {
            for k in 0..=n {
                keys.push(PolyFamilyKey { q_class, n, k });
            }
        }
    }
    keys
}

/// ½ as a rational, the leading coefficient of every interior cell.
pub fn one_half() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(2))
}
