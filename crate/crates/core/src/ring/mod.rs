//! Exact Laurent polynomials over `Z` in the variables `q`, `s` and `t`.
//!
//! `Z[q^±1, s^±1]` is the coefficient ring of the Verma-module braid
//! representations; `t` only shows up transiently, as the second variable of
//! the configuration-space local system, before it is specialized to `-q^-2`.

mod parse;
mod quantum;
mod specialize;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub use parse::ParsePolyError;
pub use quantum::{quantum_binomial, quantum_factorial, quantum_int};
pub use specialize::Specialization;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RingError {
    #[error("quantum integer [{0}]_q is only defined for non-negative arguments")]
    NegativeQuantumInteger(i64),
    #[error("quantum binomial [{k} choose {l}]_q requires l <= k")]
    BinomialOutOfRange { k: u32, l: u32 },
}

/// A variable of the coefficient ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    Q,
    S,
    T,
}

/// Exponent vector of a Laurent monomial `q^q s^s t^t`.
///
/// The derived ordering is lexicographic on `(q, s, t)`; it fixes printing
/// order and the leading term used by [`LaurentPoly::exact_div`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Exponent {
    pub q: i32,
    pub s: i32,
    pub t: i32,
}

/// Converts an exponent computed in `i64` back to storage width, panicking on overflow.
pub fn narrow(e: i64) -> i32 {
    i32::try_from(e).unwrap_or_else(|_| panic!("Laurent exponent {e} overflows i32"))
}

impl Exponent {
    pub const ZERO: Exponent = Exponent { q: 0, s: 0, t: 0 };

    pub fn new(q: i32, s: i32, t: i32) -> Self {
        Exponent { q, s, t }
    }

    pub fn get(&self, var: Var) -> i32 {
        match var {
            Var::Q => self.q,
            Var::S => self.s,
            Var::T => self.t,
        }
    }

    pub fn checked_add(self, other: Exponent) -> Exponent {
        Exponent {
            q: narrow(self.q as i64 + other.q as i64),
            s: narrow(self.s as i64 + other.s as i64),
            t: narrow(self.t as i64 + other.t as i64),
        }
    }

    pub fn checked_sub(self, other: Exponent) -> Exponent {
        Exponent {
            q: narrow(self.q as i64 - other.q as i64),
            s: narrow(self.s as i64 - other.s as i64),
            t: narrow(self.t as i64 - other.t as i64),
        }
    }

    pub fn scaled(self, k: i64) -> Exponent {
        Exponent {
            q: narrow(self.q as i64 * k),
            s: narrow(self.s as i64 * k),
            t: narrow(self.t as i64 * k),
        }
    }
}

/// An element of `Z[q^±1, s^±1, t^±1]` in canonical form: zero coefficients
/// are never stored, so equal polynomials have identical term maps.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Exponent, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, Exponent::ZERO)
    }

    pub fn monomial(c: impl Into<BigInt>, exp: Exponent) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentPoly { terms }
    }

    /// `q^e`
    pub fn q_pow(e: i32) -> Self {
        Self::monomial(1, Exponent::new(e, 0, 0))
    }

    /// `s^e`
    pub fn s_pow(e: i32) -> Self {
        Self::monomial(1, Exponent::new(0, e, 0))
    }

    /// `t^e`
    pub fn t_pow(e: i32) -> Self {
        Self::monomial(1, Exponent::new(0, 0, e))
    }

    /// Builds a polynomial from `(coefficient, exponent)` pairs, merging
    /// repeated exponents.
    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (C, Exponent)>) -> Self {
        let mut out = BTreeMap::new();
        for (c, e) in terms {
            accumulate(&mut out, e, c.into());
        }
        out.retain(|_, c| !c.is_zero());
        LaurentPoly { terms: out }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Exponent::ZERO).is_some_and(|c| c.is_one())
    }

    /// The units of the Laurent ring are exactly the monomials `±q^a s^b t^c`.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().all(|c| c.abs().is_one())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Number of nonzero terms.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent, &BigInt)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: Exponent) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn leading_term(&self) -> Option<(&Exponent, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn contains_var(&self, var: Var) -> bool {
        self.terms.keys().any(|e| e.get(var) != 0)
    }

    /// Smallest and largest exponent of `var` among the terms.
    pub fn degree_range(&self, var: Var) -> Option<(i32, i32)> {
        let mut it = self.terms.keys().map(|e| e.get(var));
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), e| (lo.min(e), hi.max(e))))
    }

    /// The integer value if this polynomial is a constant (or zero).
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&Exponent::ZERO).cloned(),
            _ => None,
        }
    }

    /// Applies an exponent map term by term and re-canonicalizes.
    pub fn map_terms(&self, mut f: impl FnMut(Exponent, &BigInt) -> (BigInt, Exponent)) -> Self {
        let mut out = BTreeMap::new();
        for (e, c) in &self.terms {
            let (c2, e2) = f(*e, c);
            accumulate(&mut out, e2, c2);
        }
        out.retain(|_, c| !c.is_zero());
        LaurentPoly { terms: out }
    }

    /// The image under `q ↦ q^-1`.
    pub fn invert_q(&self) -> Self {
        self.map_terms(|e, c| (c.clone(), Exponent::new(narrow(-(e.q as i64)), e.s, e.t)))
    }

    /// Multiplies by `c * q^a s^b t^c`.
    pub fn mul_monomial(&self, c: &BigInt, exp: Exponent) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let terms = self.terms.iter().map(|(e, k)| (e.checked_add(exp), k * c)).collect();
        LaurentPoly { terms }
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Inverse of a unit; `None` for non-units.
    pub fn unit_inverse(&self) -> Option<Self> {
        if !self.is_unit() {
            return None;
        }
        let (e, c) = self.terms.iter().next()?;
        Some(Self::monomial(c.clone(), e.scaled(-1)))
    }

    /// Exact division in the Laurent ring: returns `Some(self / divisor)` when
    /// the quotient is a Laurent polynomial and `None` otherwise (including
    /// division by zero).
    pub fn exact_div(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        // Per variable, extreme degrees of a product add up (Z is a domain),
        // which bounds where quotient terms may live.
        let mut bounds = [(0i32, 0i32); 3];
        for (slot, var) in bounds.iter_mut().zip([Var::Q, Var::S, Var::T]) {
            let (alo, ahi) = self.degree_range(var)?;
            let (blo, bhi) = divisor.degree_range(var)?;
            let (lo, hi) = (alo - blo, ahi - bhi);
            if lo > hi {
                return None;
            }
            *slot = (lo, hi);
        }
        let in_box = |e: &Exponent| {
            [e.q, e.s, e.t].iter().zip(bounds.iter()).all(|(x, (lo, hi))| lo <= x && x <= hi)
        };
        let (lead_exp, lead_coeff) = divisor.leading_term()?;
        let mut rem = self.clone();
        let mut quotient = BTreeMap::new();
        while let Some((re, rc)) = rem.leading_term() {
            let (qc, r) = rc.div_rem(lead_coeff);
            if !r.is_zero() {
                return None;
            }
            let qe = re.checked_sub(*lead_exp);
            if !in_box(&qe) {
                return None;
            }
            rem -= divisor.mul_monomial(&qc, qe);
            quotient.insert(qe, qc);
        }
        Some(LaurentPoly { terms: quotient })
    }
}

fn accumulate(map: &mut BTreeMap<Exponent, BigInt>, e: Exponent, c: BigInt) {
    match map.get_mut(&e) {
        Some(slot) => *slot += c,
        None => {
            map.insert(e, c);
        }
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            match self.terms.get_mut(e) {
                Some(slot) => {
                    *slot += c;
                    if slot.is_zero() {
                        self.terms.remove(e);
                    }
                }
                None => {
                    self.terms.insert(*e, c.clone());
                }
            }
        }
    }
}

impl AddAssign for LaurentPoly {
    fn add_assign(&mut self, rhs: LaurentPoly) {
        *self += &rhs;
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            match self.terms.get_mut(e) {
                Some(slot) => {
                    *slot -= c;
                    if slot.is_zero() {
                        self.terms.remove(e);
                    }
                }
                None => {
                    self.terms.insert(*e, -c);
                }
            }
        }
    }
}

impl SubAssign for LaurentPoly {
    fn sub_assign(&mut self, rhs: LaurentPoly) {
        *self -= &rhs;
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        if rhs.terms.len() == 1 {
            let (e, c) = rhs.terms.iter().next().unwrap();
            return self.mul_monomial(c, *e);
        }
        if self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next().unwrap();
            return rhs.mul_monomial(c, *e);
        }
        let mut out = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                accumulate(&mut out, e1.checked_add(*e2), c1 * c2);
            }
        }
        out.retain(|_, c| !c.is_zero());
        LaurentPoly { terms: out }
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl MulAssign<&LaurentPoly> for LaurentPoly {
    fn mul_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self * rhs;
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |acc, p| acc + p)
    }
}

impl std::iter::Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::one(), |acc, p| acc * p)
    }
}

/// Canonical rendering: terms in descending exponent order, factors written
/// `s`, `t`, `q`, e.g. `q^3 + s^2*q^-1 - q^-9`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            let mut factors: Vec<String> = Vec::new();
            for (name, k) in [("s", e.s), ("t", e.t), ("q", e.q)] {
                match k {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    _ => factors.push(format!("{name}^{k}")),
                }
            }
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&factors.join("*"))?;
            } else {
                write!(f, "{abs}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_form_drops_zero_terms() {
        let a = p("q + q^-1");
        let b = p("q");
        assert_eq!(&(&a - &b) - &LaurentPoly::q_pow(-1), LaurentPoly::zero());
        assert!((&a - &a).is_zero());
        assert_eq!((&a - &a).num_terms(), 0);
    }

    #[test]
    fn renders_descending() {
        let x = p("s^2*q^-1 + q^3 - q^-9");
        assert_eq!(x.to_string(), "q^3 + s^2*q^-1 - q^-9");
        assert_eq!(p("3 - 2*q").to_string(), "-2*q + 3");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(p("-1").to_string(), "-1");
    }

    #[test]
    fn units_are_signed_monomials() {
        assert!(p("-s^-2*q^3").is_unit());
        assert!(p("1").is_unit());
        assert!(!p("2*q").is_unit());
        assert!(!p("q + 1").is_unit());
        assert!(!LaurentPoly::zero().is_unit());
        let u = p("-s^-2*q^3");
        assert!((&u * &u.unit_inverse().unwrap()).is_one());
    }

    #[test]
    fn exact_division() {
        let a = p("q^2 + 1 + q^-2");
        let b = p("q + q^-1");
        let prod = &a * &b;
        assert_eq!(prod.exact_div(&b), Some(a.clone()));
        assert_eq!(prod.exact_div(&a), Some(b.clone()));
        assert_eq!(a.exact_div(&b), None);
        assert_eq!(a.exact_div(&LaurentPoly::zero()), None);
        assert_eq!(p("2*q").exact_div(&p("4")), None);
        let m = p("s - s^-1");
        assert_eq!((&m * &p("s*q - q^3")).exact_div(&m), Some(p("s*q - q^3")));
    }

    #[test]
    fn pow_matches_repeated_product() {
        let a = p("q - s^-1");
        assert_eq!(a.pow(3), &(&a * &a) * &a);
        assert!(a.pow(0).is_one());
    }
}
