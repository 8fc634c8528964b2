//! Closed forms for brackets, dot-factorials and the four dot-binomial variants.
//!
//! All values are exact. Every division in a product formula is checked for a
//! zero remainder; a remainder means the formula and the counts disagree and is
//! reported as [`ClosedError::ExactDivisionFailed`].

mod identities;
mod mobius;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gf::{is_odd_prime_power, QClass};
use crate::quadspace::{FormKind, SubspaceClass};

pub use identities::{
    group_order, ogf_printed, pascal_check, pascal_row, quotient_identity_check, shape_checks,
    shape_of, OgfReading, RowShape, ShapeReport,
};
pub use mobius::{
    asymptotic_ratio_ok, gaussian_binom, limit_value, mobius_sequence, MobiusSequence,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClosedError {
    #[error("q = {0} is not an odd prime power")]
    InvalidQ(u64),
    #[error("no normative closed form for {0}; use line_count")]
    UnsupportedFlavor(LineFlavor),
    #[error("k = {k} out of range for n = {n}")]
    KOutOfRange { n: usize, k: usize },
    #[error("{what}: {numerator} is not divisible by {denominator}")]
    ExactDivisionFailed {
        what: String,
        numerator: BigUint,
        denominator: BigUint,
    },
    #[error("{variant} is undefined at n = {n}, k = {k} (zero denominator)")]
    UndefinedForParameters { variant: Variant, n: usize, k: usize },
    #[error("{identity} fails at q = {q}, n = {n}, k = {k}")]
    IdentityViolated {
        identity: &'static str,
        q: u64,
        n: usize,
        k: usize,
    },
}

/// Which lines are counted, in which ambient.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum LineFlavor {
    SpacelikeInDot,
    TimelikeInDot,
    SpacelikeInLambdaDot,
    TimelikeInLambdaDot,
}

impl LineFlavor {
    pub const ALL: [LineFlavor; 4] = [
        LineFlavor::SpacelikeInDot,
        LineFlavor::TimelikeInDot,
        LineFlavor::SpacelikeInLambdaDot,
        LineFlavor::TimelikeInLambdaDot,
    ];

    pub fn ambient(self) -> FormKind {
        match self {
            LineFlavor::SpacelikeInDot | LineFlavor::TimelikeInDot => FormKind::Dot,
            _ => FormKind::LambdaDot,
        }
    }

    pub fn is_spacelike(self) -> bool {
        matches!(self, LineFlavor::SpacelikeInDot | LineFlavor::SpacelikeInLambdaDot)
    }
}

impl fmt::Display for LineFlavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LineFlavor::SpacelikeInDot => "spacelike-in-dot",
            LineFlavor::TimelikeInDot => "timelike-in-dot",
            LineFlavor::SpacelikeInLambdaDot => "spacelike-in-lambda-dot",
            LineFlavor::TimelikeInLambdaDot => "timelike-in-lambda-dot",
        })
    }
}

/// The (ε, δ, η) parameters of the printed line-count formulas.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineCountParams {
    pub epsilon: i8,
    pub delta: u8,
    pub eta: i8,
}

impl LineCountParams {
    pub fn new(q_class: QClass, n: usize) -> Self {
        let epsilon = if q_class == QClass::OneMod4 || matches!(n % 4, 1 | 2) {
            1
        } else {
            -1
        };
        let even = n % 2 == 0;
        LineCountParams {
            epsilon,
            delta: u8::from(even),
            eta: if even { 1 } else { -1 },
        }
    }
}

/// Ambient × subspace type of a dot-binomial coefficient.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Variant {
    /// dot-type k-subspaces of dot_n.
    DD,
    /// dot-type k-subspaces of λdot_n.
    LD,
    /// λdot-type k-subspaces of dot_n.
    DL,
    /// λdot-type k-subspaces of λdot_n.
    LL,
}

impl Variant {
    pub const ALL: [Variant; 4] = [Variant::DD, Variant::LD, Variant::DL, Variant::LL];

    pub fn ambient(self) -> FormKind {
        match self {
            Variant::DD | Variant::DL => FormKind::Dot,
            Variant::LD | Variant::LL => FormKind::LambdaDot,
        }
    }

    pub fn subspace_class(self) -> SubspaceClass {
        match self {
            Variant::DD | Variant::LD => SubspaceClass::DotType,
            Variant::DL | Variant::LL => SubspaceClass::LambdaDotType,
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl std::str::FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_uppercase().as_str() {
            "DD" => Ok(Variant::DD),
            "LD" => Ok(Variant::LD),
            "DL" => Ok(Variant::DL),
            "LL" => Ok(Variant::LL),
            _ => Err(format!("unknown variant {s:?}; expected DD, LD, DL or LL")),
        }
    }
}

pub(crate) fn q_class_checked(q: u64) -> Result<QClass, ClosedError> {
    if !is_odd_prime_power(q) {
        return Err(ClosedError::InvalidQ(q));
    }
    Ok(QClass::of(q).expect("odd q"))
}

fn pow(q: u64, e: usize) -> BigUint {
    BigUint::from(q).pow(e as u32)
}

/// `(q^{n-1} + s·q^e) / 2` with `e` the half-exponent for the parity of `n`.
fn half_sum(q: u64, n: usize, sign: i8) -> BigUint {
    let e = if n % 2 == 1 { (n - 1) / 2 } else { (n - 2) / 2 };
    let big = pow(q, n - 1);
    let small = pow(q, e);
    let twice = if sign > 0 { big + small } else { big - small };
    twice >> 1
}

/// [n]_d: the number of spacelike lines in dot_n, with [0]_d = 1.
pub fn bracket(q: u64, n: usize, flavor: LineFlavor) -> Result<BigUint, ClosedError> {
    let class = q_class_checked(q)?;
    if flavor != LineFlavor::SpacelikeInDot {
        return Err(ClosedError::UnsupportedFlavor(flavor));
    }
    if n == 0 {
        return Ok(BigUint::one());
    }
    let sign = match (class, n % 4) {
        (QClass::OneMod4, r) => {
            if r % 2 == 1 {
                1
            } else {
                -1
            }
        }
        (QClass::ThreeMod4, 1 | 2) => 1,
        (QClass::ThreeMod4, _) => -1,
    };
    Ok(half_sum(q, n, sign))
}

/// Number of lines of the given flavor in an n-dimensional ambient, n ≥ 1.
///
/// Writing d for the ambient discriminant, c for the norm class of the line and
/// χ for the quadratic character, the count of nonzero vectors of norm c is
/// `q^{n-1} + χ((-1)^{(n-1)/2}·c·d)·q^{(n-1)/2}` for odd n and
/// `q^{n-1} - χ((-1)^{n/2}·d)·q^{(n-2)/2}` for even n; each line holds two of them.
/// For `n = 0` the empty ambient has no lines, except that the spacelike count in
/// dot_0 is 1 by convention.
pub fn line_count(q: u64, n: usize, flavor: LineFlavor) -> Result<BigUint, ClosedError> {
    let class = q_class_checked(q)?;
    if n == 0 {
        return Ok(BigUint::from(u8::from(flavor == LineFlavor::SpacelikeInDot)));
    }
    let chi_minus_one: i8 = if class == QClass::OneMod4 { 1 } else { -1 };
    let chi_d: i8 = if flavor.ambient() == FormKind::Dot { 1 } else { -1 };
    let chi_c: i8 = if flavor.is_spacelike() { 1 } else { -1 };
    let sign = if n % 2 == 1 {
        chi_minus_one.pow(((n - 1) / 2) as u32) * chi_c * chi_d
    } else {
        -(chi_minus_one.pow((n / 2) as u32) * chi_d)
    };
    Ok(half_sum(q, n, sign))
}

/// The printed line-count expressions with ε, δ, η, taken literally. The two
/// λdot forms negate the correction term. `None` for n = 0, where no expression
/// is given.
pub fn bracket_verbatim(q: u64, n: usize, flavor: LineFlavor) -> Result<Option<BigInt>, ClosedError> {
    let class = q_class_checked(q)?;
    if n == 0 {
        return Ok(None);
    }
    let p = LineCountParams::new(class, n);
    let mut sign = if p.delta == 1 { -1 } else { 1 } * p.epsilon;
    if !flavor.is_spacelike() {
        sign *= p.eta;
    }
    if flavor.ambient() == FormKind::LambdaDot {
        sign = -sign;
    }
    let e = (n - usize::from(p.delta) - 1) / 2;
    let num = BigInt::from(pow(q, n - 1)) + BigInt::from(sign) * BigInt::from(pow(q, e));
    Ok(Some(num / 2))
}

/// [n]_d! = [n]_d·[n-1]_d⋯[1]_d.
pub fn bracket_factorial(q: u64, n: usize) -> Result<BigUint, ClosedError> {
    (1..=n).try_fold(BigUint::one(), |acc, m| {
        Ok(acc * bracket(q, m, LineFlavor::SpacelikeInDot)?)
    })
}

fn exact_div(what: impl FnOnce() -> String, num: BigUint, den: BigUint) -> Result<BigUint, ClosedError> {
    if den.is_zero() {
        return Err(ClosedError::ExactDivisionFailed {
            what: what(),
            numerator: num,
            denominator: den,
        });
    }
    let (quot, rem) = num.div_rem(&den);
    if !rem.is_zero() {
        return Err(ClosedError::ExactDivisionFailed {
            what: what(),
            numerator: num,
            denominator: den,
        });
    }
    Ok(quot)
}

/// Π_{i<k} top(n-i) / Π_{i<k} [k-i]_d.
fn falling_quotient(
    q: u64,
    n: usize,
    k: usize,
    top: LineFlavor,
    label: &str,
) -> Result<BigUint, ClosedError> {
    if k > n {
        return Err(ClosedError::KOutOfRange { n, k });
    }
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..k {
        num *= line_count(q, n - i, top)?;
        den *= bracket(q, k - i, LineFlavor::SpacelikeInDot)?;
    }
    exact_div(|| format!("{label}({q}, {n}, {k})"), num, den)
}

/// C(n, k)_d: dot-type k-subspaces of dot_n.
pub fn dot_binom(q: u64, n: usize, k: usize) -> Result<BigUint, ClosedError> {
    falling_quotient(q, n, k, LineFlavor::SpacelikeInDot, "DD")
}

pub fn dot_binom_variant(q: u64, n: usize, k: usize, variant: Variant) -> Result<BigUint, ClosedError> {
    q_class_checked(q)?;
    if k > n {
        return Err(ClosedError::KOutOfRange { n, k });
    }
    match variant {
        Variant::DD => dot_binom(q, n, k),
        Variant::LD => falling_quotient(q, n, k, LineFlavor::SpacelikeInLambdaDot, "LD"),
        // the zero space is dot type, so no λ-type subspace has dimension 0
        Variant::DL | Variant::LL if k == 0 => Ok(BigUint::zero()),
        Variant::DL => {
            let rest = dot_binom_variant(q, n - 1, k - 1, Variant::LD)?;
            lambda_step(q, n, k, variant, LineFlavor::TimelikeInDot, rest)
        }
        Variant::LL => {
            let rest = dot_binom(q, n - 1, k - 1)?;
            lambda_step(q, n, k, variant, LineFlavor::TimelikeInLambdaDot, rest)
        }
    }
}

/// (|λ-lines of the ambient| / |λ-lines of λdot_k|) · rest.
fn lambda_step(
    q: u64,
    n: usize,
    k: usize,
    variant: Variant,
    top: LineFlavor,
    rest: BigUint,
) -> Result<BigUint, ClosedError> {
    let den = line_count(q, k, LineFlavor::TimelikeInLambdaDot)?;
    if den.is_zero() {
        return Err(ClosedError::UndefinedForParameters { variant, n, k });
    }
    let num = line_count(q, n, top)? * rest;
    exact_div(|| format!("{variant}({q}, {n}, {k})"), num, den)
}

/// Line counts of every flavor for n = 0..=max_n at one q.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BracketTable {
    pub q: u64,
    pub q_class: QClass,
    pub entries: BTreeMap<(usize, LineFlavor), BigUint>,
}

impl BracketTable {
    pub fn build(q: u64, max_n: usize) -> Result<Self, ClosedError> {
        let q_class = q_class_checked(q)?;
        let mut entries = BTreeMap::new();
        for n in 0..=max_n {
            for flavor in LineFlavor::ALL {
                entries.insert((n, flavor), line_count(q, n, flavor)?);
            }
        }
        Ok(BracketTable {
            q,
            q_class,
            entries,
        })
    }

    pub fn get(&self, n: usize, flavor: LineFlavor) -> Option<&BigUint> {
        self.entries.get(&(n, flavor))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn bracket_examples() {
        assert_eq!(bracket(5, 4, LineFlavor::SpacelikeInDot).unwrap(), b(60));
        assert_eq!(bracket(3, 2, LineFlavor::SpacelikeInDot).unwrap(), b(2));
        for q in [3, 5, 7, 9, 11, 13] {
            assert_eq!(bracket(q, 0, LineFlavor::SpacelikeInDot).unwrap(), b(1));
        }
        assert_eq!(
            bracket(5, 2, LineFlavor::TimelikeInDot),
            Err(ClosedError::UnsupportedFlavor(LineFlavor::TimelikeInDot))
        );
        assert_eq!(bracket(4, 2, LineFlavor::SpacelikeInDot), Err(ClosedError::InvalidQ(4)));
        assert_eq!(bracket(15, 2, LineFlavor::SpacelikeInDot), Err(ClosedError::InvalidQ(15)));
    }

    #[test]
    fn bracket_agrees_with_line_count() {
        for q in [3, 5, 7, 9, 11, 13, 25, 27] {
            for n in 0..12 {
                assert_eq!(
                    bracket(q, n, LineFlavor::SpacelikeInDot).unwrap(),
                    line_count(q, n, LineFlavor::SpacelikeInDot).unwrap()
                );
            }
        }
    }

    #[test]
    fn line_counts_match_enumerated_values() {
        // (q, n) -> [dot (s, t), λdot (s, t)], counted by hand-run enumeration
        let cases: [(u64, usize, [u64; 4]); 7] = [
            (3, 2, [2, 2, 1, 1]),
            (3, 3, [3, 6, 6, 3]),
            (3, 4, [12, 12, 15, 15]),
            (5, 2, [2, 2, 3, 3]),
            (5, 3, [15, 10, 10, 15]),
            (5, 4, [60, 60, 65, 65]),
            (7, 2, [4, 4, 3, 3]),
        ];
        for (q, n, want) in cases {
            let got: Vec<u64> = LineFlavor::ALL
                .iter()
                .map(|&f| u64::try_from(line_count(q, n, f).unwrap()).unwrap())
                .collect();
            assert_eq!(got, want, "q={q} n={n}");
        }
    }

    #[test]
    fn verbatim_diverges_only_where_expected() {
        assert_eq!(
            bracket_verbatim(3, 2, LineFlavor::SpacelikeInDot).unwrap(),
            Some(BigInt::from(1))
        );
        for q in [5, 9, 13] {
            for n in 1..10 {
                for f in LineFlavor::ALL {
                    assert_eq!(
                        bracket_verbatim(q, n, f).unwrap().unwrap(),
                        BigInt::from(line_count(q, n, f).unwrap())
                    );
                }
            }
        }
        for q in [3, 7, 11] {
            for n in (1..10).step_by(2) {
                for f in LineFlavor::ALL {
                    assert_eq!(
                        bracket_verbatim(q, n, f).unwrap().unwrap(),
                        BigInt::from(line_count(q, n, f).unwrap())
                    );
                }
            }
            for n in (2..10).step_by(2) {
                for f in LineFlavor::ALL {
                    assert_ne!(
                        bracket_verbatim(q, n, f).unwrap().unwrap(),
                        BigInt::from(line_count(q, n, f).unwrap())
                    );
                }
            }
        }
    }

    #[test]
    fn params() {
        let p = LineCountParams::new(QClass::ThreeMod4, 3);
        assert_eq!((p.epsilon, p.delta, p.eta), (-1, 0, -1));
        let p = LineCountParams::new(QClass::ThreeMod4, 2);
        assert_eq!((p.epsilon, p.delta, p.eta), (1, 1, 1));
        let p = LineCountParams::new(QClass::OneMod4, 4);
        assert_eq!((p.epsilon, p.delta, p.eta), (1, 1, 1));
    }

    #[test]
    fn factorial_examples() {
        assert_eq!(bracket_factorial(3, 3).unwrap(), b(6));
        assert_eq!(bracket_factorial(5, 2).unwrap(), b(2));
        assert_eq!(bracket_factorial(7, 0).unwrap(), b(1));
    }

    #[test]
    fn dot_binom_examples() {
        assert_eq!(dot_binom(5, 4, 2).unwrap(), b(450));
        assert_eq!(dot_binom(3, 4, 2).unwrap(), b(18));
        for n in 0..8 {
            assert_eq!(dot_binom(7, n, 0).unwrap(), b(1));
            assert_eq!(dot_binom(7, n, n).unwrap(), b(1));
        }
        assert_eq!(dot_binom(3, 2, 3), Err(ClosedError::KOutOfRange { n: 2, k: 3 }));
    }

    #[test]
    fn variant_examples() {
        assert_eq!(dot_binom_variant(3, 2, 1, Variant::LD).unwrap(), b(1));
        assert_eq!(dot_binom_variant(3, 2, 1, Variant::DL).unwrap(), b(2));
        for q in [3, 5, 7] {
            for n in 1..7 {
                assert_eq!(dot_binom_variant(q, n, n, Variant::LL).unwrap(), b(1));
                assert_eq!(dot_binom_variant(q, n, n, Variant::DL).unwrap(), b(0));
                assert_eq!(dot_binom_variant(q, n, n, Variant::LD).unwrap(), b(0));
                assert_eq!(dot_binom_variant(q, n, 0, Variant::LD).unwrap(), b(1));
            }
        }
    }

    #[test]
    fn every_variant_divides_exactly() {
        for q in [3, 5, 7, 9, 11, 13, 25, 27] {
            for n in 0..=10 {
                for k in 0..=n {
                    for v in Variant::ALL {
                        dot_binom_variant(q, n, k, v).unwrap();
                    }
                }
            }
        }
    }

    #[test]
    fn lambda_rows_are_reversed() {
        // λdot_n = dot_k ⊥ λdot_{n-k}, so dot-type k-subspaces of λdot_n pair
        // with λ-type (n-k)-subspaces via ⊥
        for q in [3, 5, 7, 9, 11] {
            for n in 1..9 {
                for k in 0..=n {
                    assert_eq!(
                        dot_binom_variant(q, n, k, Variant::LD).unwrap(),
                        dot_binom_variant(q, n, n - k, Variant::LL).unwrap()
                    );
                    assert_eq!(
                        dot_binom_variant(q, n, k, Variant::DL).unwrap(),
                        dot_binom_variant(q, n, n - k, Variant::DL).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn monotone_brackets() {
        for q in [3, 5, 7, 9, 11, 13] {
            let t = BracketTable::build(q, 10).unwrap();
            for n in 0..10 {
                assert!(
                    t.get(n, LineFlavor::SpacelikeInDot) <= t.get(n + 1, LineFlavor::SpacelikeInDot)
                );
            }
        }
    }

    #[test]
    fn variant_parse() {
        assert_eq!("ld".parse::<Variant>(), Ok(Variant::LD));
        assert!("XY".parse::<Variant>().is_err());
    }
}
