use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Dense univariate polynomial in `q` with exact rational coefficients, lowest
/// degree first. Trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(c)))
    }

    /// c·q^d.
    pub fn monomial(c: BigRational, d: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); d];
        coeffs.push(c);
        Self::from_coeffs(coeffs)
    }

    /// q^d.
    pub fn q_pow(d: usize) -> Self {
        Self::monomial(BigRational::one(), d)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Exponent of the lowest nonzero term.
    pub fn low_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn leading(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    /// Coefficients reversed: q^deg·p(1/q).
    pub fn reverse(&self) -> Self {
        Self::from_coeffs(self.coeffs.iter().rev().cloned().collect())
    }

    /// p / q^low_degree.
    pub fn depress(&self) -> Self {
        let m = self.low_degree().unwrap_or(0);
        RatPoly {
            coeffs: self.coeffs[m..].to_vec(),
        }
    }

    /// p(q²).
    pub fn in_q_squared(&self) -> Self {
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() * 2];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[2 * i] = c.clone();
        }
        Self::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, x: i64) -> BigRational {
        self.eval(&BigRational::from_integer(BigInt::from(x)))
    }

    /// Quotient and remainder; `None` when dividing by zero.
    pub fn div_rem(&self, divisor: &RatPoly) -> Option<(RatPoly, RatPoly)> {
        let dd = divisor.degree()?;
        let lead = divisor.leading();
        let mut rem = self.coeffs.clone();
        let Some(sd) = self.degree() else {
            return Some((RatPoly::zero(), RatPoly::zero()));
        };
        if sd < dd {
            return Some((RatPoly::zero(), self.clone()));
        }
        let mut quot = vec![BigRational::zero(); sd - dd + 1];
        for i in (0..=sd - dd).rev() {
            let c = &rem[i + dd] / &lead;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &c * dc;
            }
            quot[i] = c;
        }
        Some((RatPoly::from_coeffs(quot), RatPoly::from_coeffs(rem)))
    }

    /// Quotient when the division leaves no remainder.
    pub fn exact_div(&self, divisor: &RatPoly) -> Option<RatPoly> {
        self.div_rem(divisor)
            .and_then(|(q, r)| r.is_zero().then_some(q))
    }
}

impl Add for &RatPoly {
    type Output = RatPoly;

    fn add(self, rhs: &RatPoly) -> RatPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::from_coeffs((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;

    fn sub(self, rhs: &RatPoly) -> RatPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::from_coeffs((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;

    fn mul(self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::from_coeffs(out)
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;

    fn neg(self) -> RatPoly {
        RatPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RatPoly {
            type Output = RatPoly;

            fn $m(self, rhs: RatPoly) -> RatPoly {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Descending powers, e.g. `1/2*q^4 - q^3 + 1/2*q^2`.
impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let unit = mag.is_one();
            match (d, unit) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => {}
                (_, false) => write!(f, "{mag}*")?,
            }
            match d {
                0 => {}
                1 => f.write_str("q")?,
                _ => write!(f, "q^{d}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn p(c: &[(i64, i64)]) -> RatPoly {
        RatPoly::from_coeffs(c.iter().map(|&(n, d)| r(n, d)).collect())
    }

    #[test]
    fn display() {
        assert_eq!(p(&[(0, 1), (0, 1), (1, 2), (1, 1), (1, 2)]).to_string(), "1/2*q^4 + q^3 + 1/2*q^2");
        assert_eq!(p(&[(0, 1), (0, 1), (1, 2), (-1, 1), (1, 2)]).to_string(), "1/2*q^4 - q^3 + 1/2*q^2");
        assert_eq!(p(&[(-1, 2), (0, 1), (1, 2)]).to_string(), "1/2*q^2 - 1/2");
        assert_eq!(p(&[(1, 1), (-1, 1)]).to_string(), "-q + 1");
        assert_eq!(RatPoly::zero().to_string(), "0");
        assert_eq!(RatPoly::one().to_string(), "1");
    }

    #[test]
    fn trims_and_degrees() {
        let x = p(&[(0, 1), (3, 1), (0, 1)]);
        assert_eq!(x.degree(), Some(1));
        assert_eq!(x.low_degree(), Some(1));
        assert_eq!(RatPoly::zero().degree(), None);
    }

    #[test]
    fn division() {
        // (q^4 - 1) / (q^2 - 1) = q^2 + 1
        let num = p(&[(-1, 1), (0, 1), (0, 1), (0, 1), (1, 1)]);
        let den = p(&[(-1, 1), (0, 1), (1, 1)]);
        assert_eq!(num.exact_div(&den).unwrap(), p(&[(1, 1), (0, 1), (1, 1)]));
        assert!(den.exact_div(&p(&[(0, 1), (1, 1)])).is_none());
        assert!(num.div_rem(&RatPoly::zero()).is_none());
    }

    fn arb_poly() -> impl Strategy<Value = RatPoly> {
        prop::collection::vec((-20i64..20, 1i64..6), 0..7)
            .prop_map(|v| RatPoly::from_coeffs(v.into_iter().map(|(n, d)| r(n, d)).collect()))
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
        }

        #[test]
        fn division_identity(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            let (q, rem) = a.div_rem(&b).unwrap();
            prop_assert_eq!(&(&q * &b) + &rem, a);
            prop_assert!(rem.degree() < b.degree());
        }

        #[test]
        fn evaluation_is_a_homomorphism(a in arb_poly(), b in arb_poly(), x in -7i64..7) {
            prop_assert_eq!((&a * &b).eval_int(x), a.eval_int(x) * b.eval_int(x));
            prop_assert_eq!((&a + &b).eval_int(x), a.eval_int(x) + b.eval_int(x));
        }
    }
}
