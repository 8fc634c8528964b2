//! Finite fields GF(p^e) of odd characteristic.
//!
//! Elements are stored as their integer encoding `c_0 + c_1 p + ... + c_{e-1} p^{e-1}`
//! where `c_0 + c_1 t + ...` is the reduced residue modulo the defining polynomial.
//! The encoding doubles as the canonical element order: `0, 1, 2, ...`.
//!
//! Multiplication goes through discrete log tables built from a primitive element,
//! so a [`FieldSpec`] is cheap to query once constructed. The tables are shared
//! behind an `Arc`, cloning a `FieldSpec` does not copy them.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest extension degree accepted by [`FieldSpec::new`].
pub const MAX_DEGREE: u32 = 4;

/// Largest field order accepted by [`FieldSpec::new`].
pub const MAX_ORDER: u64 = 1 << 16;

/// Addition tables are materialized for extension fields up to this order.
const ADD_TABLE_LIMIT: u32 = 1024;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GfError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("characteristic 2 is not supported")]
    EvenCharacteristic,
    #[error("extension degree {0} out of range 1..={MAX_DEGREE}")]
    DegreeOutOfRange(u32),
    #[error("field order {0} exceeds the supported bound {MAX_ORDER}")]
    OrderTooLarge(u64),
    #[error("{0} is not an odd prime power")]
    NotPrimePower(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("element index {index} out of range for GF({q})")]
    ElementOutOfRange { index: u64, q: u64 },
}

/// Residue class of an odd prime power modulo 4.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum QClass {
    /// q ≡ 1 (mod 4); −1 is a square.
    OneMod4,
    /// q ≡ 3 (mod 4); −1 is a non-square.
    ThreeMod4,
}

impl QClass {
    /// Class of an odd integer; `None` for even input.
    pub fn of(q: u64) -> Option<QClass> {
        match q % 4 {
            1 => Some(QClass::OneMod4),
            3 => Some(QClass::ThreeMod4),
            _ => None,
        }
    }

    pub fn residue(self) -> u32 {
        match self {
            QClass::OneMod4 => 1,
            QClass::ThreeMod4 => 3,
        }
    }

    /// The value q is sent to when taking the classical limit: 1 or −1.
    pub fn limit_point(self) -> i64 {
        match self {
            QClass::OneMod4 => 1,
            QClass::ThreeMod4 => -1,
        }
    }
}

impl fmt::Display for QClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod 4", self.residue())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SquareClass {
    Zero,
    Square,
    NonSquare,
}

impl SquareClass {
    /// Quadratic character: 0, 1 or −1.
    pub fn character(self) -> i32 {
        match self {
            SquareClass::Zero => 0,
            SquareClass::Square => 1,
            SquareClass::NonSquare => -1,
        }
    }
}

/// An element of some GF(q), meaningful only together with its [`FieldSpec`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    /// Integer encoding, which is also the position in canonical order.
    pub fn index(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub(crate) fn from_raw(index: u32) -> Self {
        FieldElement(index)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

struct FieldTables {
    p: u32,
    e: u32,
    q: u32,
    /// Monic defining polynomial, lowest degree first, length e + 1.
    modulus: Vec<u32>,
    lambda: FieldElement,
    /// exp[i] = g^i for a fixed primitive g, i in 0..q-1.
    exp: Vec<u32>,
    /// log[a] for a != 0; log[0] is unused.
    log: Vec<u32>,
    /// Row-major addition table, only for small extension fields.
    add: Option<Vec<u32>>,
    neg: Vec<u32>,
}

/// The field GF(p^e) with its canonical modulus and non-square.
#[derive(Clone)]
pub struct FieldSpec {
    t: Arc<FieldTables>,
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldSpec")
            .field("p", &self.t.p)
            .field("e", &self.t.e)
            .field("q", &self.t.q)
            .field("modulus", &self.t.modulus)
            .field("lambda", &self.t.lambda)
            .finish()
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.t.p == other.t.p && self.t.e == other.t.e && self.t.modulus == other.t.modulus
    }
}

impl Eq for FieldSpec {}

/// Builds GF(p^e); see [`FieldSpec::new`].
pub fn make_field(p: u64, e: u32) -> Result<FieldSpec, GfError> {
    FieldSpec::new(p, e)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Splits `q` as `p^e` with `p` prime, if possible.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q {
        if q % p == 0 {
            break;
        }
        p += 1;
    }
    if q % p != 0 {
        // q itself is prime
        return Some((q, 1));
    }
    let mut rest = q;
    let mut e = 0;
    while rest % p == 0 {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

/// Whether `q` is an odd prime power (any size).
pub fn is_odd_prime_power(q: u64) -> bool {
    q % 2 == 1 && prime_power(q).is_some()
}

fn distinct_prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

// Small dense polynomial helpers over GF(p), lowest degree first.

fn poly_trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    // m is monic
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap() as u64;
        let shift = r.len() - 1 - dm;
        if lead != 0 {
            for (i, &c) in m.iter().enumerate() {
                let idx = shift + i;
                let sub = (lead * c as u64) % p as u64;
                r[idx] = ((r[idx] as u64 + p as u64 - sub) % p as u64) as u32;
            }
        }
        r.pop();
    }
    r
}

fn poly_mulmod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    let prod: Vec<u32> = prod.into_iter().map(|c| c as u32).collect();
    poly_rem(&prod, m, p)
}

fn digits(mut index: u32, p: u32, e: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(e as usize);
    for _ in 0..e {
        out.push(index % p);
        index /= p;
    }
    out
}

fn undigits(coeffs: &[u32], p: u32) -> u32 {
    coeffs.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Exhaustive irreducibility test for monic polynomials of degree ≤ 4:
/// no monic factor of degree 1..=deg/2.
fn is_irreducible(m: &[u32], p: u32) -> bool {
    let deg = m.len() - 1;
    if deg <= 1 {
        return deg == 1;
    }
    for d in 1..=deg / 2 {
        // every monic polynomial of degree d
        let count = (p as u64).pow(d as u32);
        for idx in 0..count {
            let mut f = digits(idx as u32, p, d as u32);
            f.push(1);
            if poly_trim(poly_rem(m, &f, p)).is_empty() {
                return false;
            }
        }
    }
    true
}

impl FieldSpec {
    /// Builds GF(p^e) using the smallest monic irreducible modulus (ordered by
    /// the integer encoding of its lower coefficients) and the smallest non-square
    /// in canonical element order.
    pub fn new(p: u64, e: u32) -> Result<Self, GfError> {
        if p == 2 {
            return Err(GfError::EvenCharacteristic);
        }
        if !is_prime(p) {
            return Err(GfError::NotPrime(p));
        }
        if e == 0 || e > MAX_DEGREE {
            return Err(GfError::DegreeOutOfRange(e));
        }
        let q = p
            .checked_pow(e)
            .filter(|&q| q <= MAX_ORDER)
            .ok_or(GfError::OrderTooLarge(p.saturating_pow(e)))?;
        let p32 = p as u32;
        let q32 = q as u32;

        let modulus = if e == 1 {
            vec![0, 1]
        } else {
            let lower = (0..q32)
                .map(|idx| {
                    let mut m = digits(idx, p32, e);
                    m.push(1);
                    m
                })
                .find(|m| is_irreducible(m, p32))
                .expect("an irreducible polynomial of every degree exists");
            lower
        };

        let slow_mul = |a: u32, b: u32| -> u32 {
            if e == 1 {
                ((a as u64 * b as u64) % p) as u32
            } else {
                let r = poly_mulmod(&digits(a, p32, e), &digits(b, p32, e), &modulus, p32);
                let mut r = r;
                r.resize(e as usize, 0);
                undigits(&r, p32)
            }
        };
        let slow_pow = |a: u32, mut k: u64| -> u32 {
            let mut base = a;
            let mut acc = 1u32;
            while k > 0 {
                if k & 1 == 1 {
                    acc = slow_mul(acc, base);
                }
                base = slow_mul(base, base);
                k >>= 1;
            }
            acc
        };

        let order = q - 1;
        let factors = distinct_prime_factors(order);
        let generator = (1..q32)
            .find(|&g| factors.iter().all(|&r| slow_pow(g, order / r) != 1))
            .expect("the multiplicative group of a finite field is cyclic");

        let mut exp = Vec::with_capacity(order as usize);
        let mut log = vec![0u32; q as usize];
        let mut x = 1u32;
        for i in 0..order as u32 {
            exp.push(x);
            log[x as usize] = i;
            x = slow_mul(x, generator);
        }

        let neg: Vec<u32> = (0..q32)
            .map(|a| {
                let d: Vec<u32> = digits(a, p32, e).iter().map(|&c| (p32 - c) % p32).collect();
                undigits(&d, p32)
            })
            .collect();

        let add = (e > 1 && q32 <= ADD_TABLE_LIMIT).then(|| {
            let mut table = vec![0u32; (q * q) as usize];
            for a in 0..q32 {
                let da = digits(a, p32, e);
                for b in 0..q32 {
                    let db = digits(b, p32, e);
                    let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p32).collect();
                    table[(a * q32 + b) as usize] = undigits(&s, p32);
                }
            }
            table
        });

        // Non-squares are exactly the odd powers of a generator; the smallest
        // one in canonical order is the canonical lambda.
        let lambda = (1..q32)
            .find(|&a| log[a as usize] % 2 == 1)
            .map(FieldElement)
            .expect("odd q has non-squares");

        Ok(FieldSpec {
            t: Arc::new(FieldTables {
                p: p32,
                e,
                q: q32,
                modulus,
                lambda,
                exp,
                log,
                add,
                neg,
            }),
        })
    }

    /// Builds the field of order `q`, which must be an odd prime power.
    pub fn of_order(q: u64) -> Result<Self, GfError> {
        let (p, e) = prime_power(q).ok_or(GfError::NotPrimePower(q))?;
        FieldSpec::new(p, e)
    }

    pub fn p(&self) -> u64 {
        self.t.p as u64
    }

    pub fn e(&self) -> u32 {
        self.t.e
    }

    pub fn q(&self) -> u64 {
        self.t.q as u64
    }

    pub fn q_big(&self) -> BigUint {
        BigUint::from(self.t.q)
    }

    pub fn q_mod4(&self) -> u32 {
        self.t.q % 4
    }

    pub fn q_class(&self) -> QClass {
        QClass::of(self.q()).expect("odd field order")
    }

    /// Coefficients of the monic modulus, lowest degree first.
    pub fn modulus(&self) -> &[u32] {
        &self.t.modulus
    }

    /// The canonical non-square.
    pub fn lambda(&self) -> FieldElement {
        self.t.lambda
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::ZERO
    }

    pub fn one(&self) -> FieldElement {
        FieldElement::ONE
    }

    /// Element with the given canonical index.
    pub fn element(&self, index: u64) -> Result<FieldElement, GfError> {
        if index >= self.q() {
            return Err(GfError::ElementOutOfRange {
                index,
                q: self.q(),
            });
        }
        Ok(FieldElement(index as u32))
    }

    /// Image of an integer under Z → GF(p) ⊆ GF(q).
    pub fn from_int(&self, n: i64) -> FieldElement {
        FieldElement(n.rem_euclid(self.t.p as i64) as u32)
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FieldElement, GfError> {
        let e = self.t.e as usize;
        if coeffs.len() > e || coeffs.iter().any(|&c| c >= self.t.p) {
            return Err(GfError::ElementOutOfRange {
                index: undigits(coeffs, self.t.p) as u64,
                q: self.q(),
            });
        }
        Ok(FieldElement(undigits(coeffs, self.t.p)))
    }

    /// Residues `c_0, ..., c_{e-1}` of the polynomial representative.
    pub fn coeffs(&self, a: FieldElement) -> Vec<u32> {
        digits(a.0, self.t.p, self.t.e)
    }

    /// All elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.t.q).map(FieldElement)
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let t = &*self.t;
        if t.e == 1 {
            let s = a.0 + b.0;
            return FieldElement(if s >= t.p { s - t.p } else { s });
        }
        if let Some(table) = &t.add {
            return FieldElement(table[(a.0 * t.q + b.0) as usize]);
        }
        let (mut x, mut y) = (a.0, b.0);
        let mut out = 0;
        let mut scale = 1;
        for _ in 0..t.e {
            out += ((x % t.p + y % t.p) % t.p) * scale;
            x /= t.p;
            y /= t.p;
            scale *= t.p;
        }
        FieldElement(out)
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        FieldElement(self.t.neg[a.0 as usize])
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let t = &*self.t;
        if a.0 == 0 || b.0 == 0 {
            return FieldElement::ZERO;
        }
        if t.e == 1 {
            return FieldElement(((a.0 as u64 * b.0 as u64) % t.p as u64) as u32);
        }
        let order = t.q - 1;
        let s = t.log[a.0 as usize] + t.log[b.0 as usize];
        FieldElement(t.exp[(if s >= order { s - order } else { s }) as usize])
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement, GfError> {
        if a.is_zero() {
            return Err(GfError::DivisionByZero);
        }
        let t = &*self.t;
        let order = t.q - 1;
        let l = t.log[a.0 as usize];
        Ok(FieldElement(t.exp[((order - l) % order) as usize]))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement, GfError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: FieldElement, mut k: u64) -> FieldElement {
        let mut base = a;
        let mut acc = FieldElement::ONE;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// Classifies `a` by Euler's criterion `a^((q-1)/2) = ±1`.
    pub fn square_class(&self, a: FieldElement) -> SquareClass {
        if a.is_zero() {
            return SquareClass::Zero;
        }
        // a^((q-1)/2) = g^(log a · (q-1)/2) is 1 iff log a is even
        if self.t.log[a.0 as usize] % 2 == 0 {
            SquareClass::Square
        } else {
            SquareClass::NonSquare
        }
    }

    pub fn is_square(&self, a: FieldElement) -> bool {
        self.square_class(a) == SquareClass::Square
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn fields() -> Vec<FieldSpec> {
        [(3, 1), (5, 1), (7, 1), (11, 1), (13, 1), (3, 2), (5, 2), (7, 2), (3, 3), (3, 4)]
            .iter()
            .map(|&(p, e)| FieldSpec::new(p, e).unwrap())
            .collect()
    }

    fn squares_by_enumeration(f: &FieldSpec) -> HashSet<FieldElement> {
        f.elements().filter(|a| !a.is_zero()).map(|a| f.mul(a, a)).collect()
    }

    #[test]
    fn make_field_examples() {
        let f5 = make_field(5, 1).unwrap();
        assert_eq!(f5.q(), 5);
        assert_eq!(f5.lambda(), FieldElement(2));
        let f3 = make_field(3, 1).unwrap();
        assert_eq!(f3.lambda(), FieldElement(2));
        let f9 = make_field(3, 2).unwrap();
        assert_eq!(f9.q(), 9);
        assert_eq!(f9.q_mod4(), 1);
        // t^2 + 1
        assert_eq!(f9.modulus(), &[1, 0, 1]);
    }

    #[test]
    fn make_field_errors() {
        assert_eq!(make_field(2, 1).unwrap_err(), GfError::EvenCharacteristic);
        assert_eq!(make_field(9, 1).unwrap_err(), GfError::NotPrime(9));
        assert_eq!(make_field(3, 0).unwrap_err(), GfError::DegreeOutOfRange(0));
        assert_eq!(make_field(3, 5).unwrap_err(), GfError::DegreeOutOfRange(5));
        assert!(matches!(make_field(65537, 1), Err(GfError::OrderTooLarge(_))));
        assert_eq!(FieldSpec::of_order(15).unwrap_err(), GfError::NotPrimePower(15));
    }

    #[test]
    fn arithmetic_examples() {
        let f7 = make_field(7, 1).unwrap();
        let e = |i| f7.element(i).unwrap();
        assert_eq!(f7.mul(e(3), e(5)), e(1));
        assert_eq!(f7.inv(e(3)).unwrap(), e(5));
        assert_eq!(f7.inv(e(0)), Err(GfError::DivisionByZero));

        let f9 = make_field(3, 2).unwrap();
        let t = f9.from_coeffs(&[0, 1]).unwrap();
        assert_eq!(f9.mul(t, t), f9.from_int(2));
    }

    #[test]
    fn square_class_examples() {
        let f7 = make_field(7, 1).unwrap();
        assert_eq!(f7.square_class(f7.from_int(2)), SquareClass::Square);
        assert_eq!(f7.square_class(f7.from_int(3)), SquareClass::NonSquare);
        for f in fields() {
            assert_eq!(f.square_class(f.zero()), SquareClass::Zero);
        }
    }

    #[test]
    fn moduli_are_irreducible_and_smallest() {
        for f in fields().into_iter().filter(|f| f.e() > 1) {
            let p = f.p() as u32;
            let m = f.modulus();
            assert!(is_irreducible(m, p));
            let own = undigits(&m[..m.len() - 1], p);
            for idx in 0..own {
                let mut cand = digits(idx, p, f.e());
                cand.push(1);
                assert!(!is_irreducible(&cand, p), "{cand:?} is smaller and irreducible");
            }
        }
    }

    #[test]
    fn square_class_matches_exhaustive_squaring() {
        for f in fields().into_iter().filter(|f| f.q() <= 81) {
            let squares = squares_by_enumeration(&f);
            let half = (f.q() - 1) / 2;
            assert_eq!(squares.len() as u64, half);
            let mut non = 0;
            for a in f.elements().filter(|a| !a.is_zero()) {
                let euler = f.pow(a, half);
                let class = f.square_class(a);
                assert_eq!(class == SquareClass::Square, squares.contains(&a));
                assert_eq!(class == SquareClass::Square, euler == f.one());
                if class == SquareClass::NonSquare {
                    assert_eq!(euler, f.neg(f.one()));
                    non += 1;
                }
            }
            assert_eq!(non, half);
            assert!(!squares.contains(&f.lambda()));
            // canonical lambda: nothing smaller is a non-square
            for a in f.elements().take(f.lambda().index() as usize).skip(1) {
                assert!(squares.contains(&a));
            }
        }
    }

    #[test]
    fn square_class_is_multiplicative() {
        for f in fields().into_iter().filter(|f| f.q() <= 49) {
            for a in f.elements().skip(1) {
                for b in f.elements().skip(1) {
                    let lhs = f.square_class(f.mul(a, b)).character();
                    let rhs = f.square_class(a).character() * f.square_class(b).character();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn minus_one_follows_q_mod_4() {
        for f in fields() {
            let minus_one = f.neg(f.one());
            let expected = if f.q_mod4() == 1 {
                SquareClass::Square
            } else {
                SquareClass::NonSquare
            };
            assert_eq!(f.square_class(minus_one), expected, "q = {}", f.q());
        }
    }

    #[test]
    fn field_axioms_exhaustive_small() {
        for f in fields().into_iter().filter(|f| f.q() <= 27) {
            for a in f.elements() {
                assert_eq!(f.add(a, f.neg(a)), f.zero());
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
                }
                for b in f.elements() {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in f.elements() {
                        let lhs = f.mul(a, f.add(b, c));
                        let rhs = f.add(f.mul(a, b), f.mul(a, c));
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn extension_multiplication_matches_polynomial_product() {
        let f = make_field(3, 3).unwrap();
        let p = 3;
        for a in f.elements() {
            for b in f.elements() {
                let mut r = poly_mulmod(&f.coeffs(a), &f.coeffs(b), f.modulus(), p);
                r.resize(3, 0);
                assert_eq!(f.coeffs(f.mul(a, b)), r);
            }
        }
    }

    #[test]
    fn prime_power_detection() {
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(13), Some((13, 1)));
        assert_eq!(prime_power(1009), Some((1009, 1)));
        assert_eq!(prime_power(12), None);
        assert!(is_odd_prime_power(125));
        assert!(!is_odd_prime_power(8));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn gf625_ring_laws(a in 0u64..625, b in 0u64..625, c in 0u64..625) {
                let f = make_field(5, 4).unwrap();
                let (a, b, c) = (f.element(a).unwrap(), f.element(b).unwrap(), f.element(c).unwrap());
                prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                prop_assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                prop_assert_eq!(f.mul(a, f.sub(b, c)), f.sub(f.mul(a, b), f.mul(a, c)));
                if !b.is_zero() {
                    prop_assert_eq!(f.mul(f.div(a, b).unwrap(), b), a);
                }
            }
        }
    }
}
