//! Laurent polynomials in one variable `t` with arbitrary-precision integer
//! coefficients.
//!
//! Values are stored densely: a lowest exponent plus the run of coefficients
//! from that exponent upwards. Every constructor trims zeros at both ends so
//! that equal values always have equal representations.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LaurentError {
    #[error("operation is undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial {0} is not equivalent to a symmetric polynomial up to a unit")]
    NotSymmetrizable(String),
    #[error("cannot parse polynomial {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

/// A unit `sign * t^shift` of the Laurent polynomial ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct Unit {
    sign: i8,
    shift: i64,
}

impl Unit {
    pub const ONE: Unit = Unit { sign: 1, shift: 0 };

    /// Builds `sign * t^shift`; any negative `sign` is read as `-1`.
    pub fn new(sign: i8, shift: i64) -> Self {
        Unit {
            sign: if sign < 0 { -1 } else { 1 },
            shift,
        }
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn inverse(&self) -> Unit {
        Unit::new(self.sign, -self.shift)
    }

    pub fn compose(&self, other: &Unit) -> Unit {
        Unit::new(self.sign * other.sign, self.shift + other.shift)
    }

    /// Returns `self * p`.
    pub fn apply(&self, p: &LaurentPoly) -> LaurentPoly {
        let shifted = p.shift(self.shift);
        if self.sign < 0 {
            -shifted
        } else {
            shifted
        }
    }

    pub fn to_poly(&self) -> LaurentPoly {
        LaurentPoly::monomial(BigInt::from(self.sign), self.shift)
    }
}

impl fmt::Display for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.sign < 0 { "-" } else { "+" };
        write!(f, "{sign}t^{}", self.shift)
    }
}

impl FromStr for Unit {
    type Err = LaurentError;

    /// Accepts the `Display` form, `+t^k` or `-t^k`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |reason: &str| LaurentError::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let (sign, rest) = match s.trim().as_bytes().first() {
            Some(b'+') => (1, &s.trim()[1..]),
            Some(b'-') => (-1, &s.trim()[1..]),
            _ => return Err(bad("a unit starts with + or -")),
        };
        let exp = rest.strip_prefix("t^").ok_or_else(|| bad("expected t^k"))?;
        let shift = exp.parse::<i64>().map_err(|e| bad(&e.to_string()))?;
        Ok(Unit::new(sign, shift))
    }
}

impl From<Unit> for String {
    fn from(u: Unit) -> String {
        u.to_string()
    }
}

impl TryFrom<String> for Unit {
    type Error = LaurentError;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

/// An element of `Z[t, t^-1]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    min_exp: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    /// Builds `sum coeffs[i] * t^(min_exp + i)`, trimming zero coefficients.
    pub fn new(min_exp: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = LaurentPoly { min_exp, coeffs };
        p.normalize();
        p
    }

    pub fn from_i64s(min_exp: i64, coeffs: &[i64]) -> Self {
        Self::new(min_exp, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        LaurentPoly {
            min_exp: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(0, vec![c.into()])
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn monomial(c: impl Into<BigInt>, exp: i64) -> Self {
        Self::new(exp, vec![c.into()])
    }

    /// `a * t + b`, the shape of every entry of `tS - S^T`.
    pub fn linear(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        Self::new(0, vec![b.into(), a.into()])
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros == self.coeffs.len() {
            self.coeffs.clear();
            self.min_exp = 0;
            return;
        }
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.min_exp += lead_zeros as i64;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.min_exp == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent with a nonzero coefficient; `0` for the zero polynomial.
    pub fn min_exp(&self) -> i64 {
        self.min_exp
    }

    /// Coefficients from `t^min_exp` upwards.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Highest exponent with a nonzero coefficient, `None` for zero.
    pub fn max_exp(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.min_exp + self.coeffs.len() as i64 - 1)
        }
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn top_degree(&self) -> Result<i64, LaurentError> {
        self.max_exp().ok_or(LaurentError::ZeroPolynomial)
    }

    /// `max_exp - min_exp`; zero for constants and for the zero polynomial.
    pub fn span(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        let idx = exp - self.min_exp;
        if idx < 0 || idx >= self.coeffs.len() as i64 {
            BigInt::zero()
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    /// Coefficient of the top-degree term.
    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Nonzero terms as `(exponent, coefficient)` in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.min_exp + i as i64, c))
    }

    /// True when no negative powers of `t` occur.
    pub fn is_ordinary(&self) -> bool {
        self.min_exp >= 0
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> LaurentPoly {
        if self.is_zero() {
            return self.clone();
        }
        LaurentPoly {
            min_exp: self.min_exp + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> LaurentPoly {
        LaurentPoly::new(self.min_exp, self.coeffs.iter().map(|x| x * c).collect())
    }

    /// gcd of the coefficients (nonnegative); zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    pub fn pow(&self, e: u32) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `p(1/t)`.
    pub fn reciprocal(&self) -> LaurentPoly {
        match self.max_exp() {
            None => LaurentPoly::zero(),
            Some(top) => {
                let mut coeffs = self.coeffs.clone();
                coeffs.reverse();
                LaurentPoly {
                    min_exp: -top,
                    coeffs,
                }
            }
        }
    }

    /// `p(1)`, the sum of all coefficients.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// `p(t^n)` for `n >= 1`.
    pub fn substitute_power(&self, n: u32) -> LaurentPoly {
        assert!(n >= 1, "substitute_power needs n >= 1");
        if self.is_zero() || n == 1 {
            return self.clone();
        }
        let step = n as usize;
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * step] = c.clone();
        }
        LaurentPoly::new(self.min_exp * n as i64, coeffs)
    }

    /// Decides `self ≐ other`, returning the unit `u` with `self = u * other`.
    ///
    /// Aligns supports, then compares the coefficient runs once for each sign.
    pub fn doteq(&self, other: &LaurentPoly) -> Option<Unit> {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => return Some(Unit::ONE),
            (true, false) | (false, true) => return None,
            _ => {}
        }
        if self.coeffs.len() != other.coeffs.len() {
            return None;
        }
        let shift = self.min_exp - other.min_exp;
        if self.coeffs == other.coeffs {
            Some(Unit::new(1, shift))
        } else if self.coeffs.iter().zip(&other.coeffs).all(|(a, b)| *a == -b) {
            Some(Unit::new(-1, shift))
        } else {
            None
        }
    }

    /// True when `p(1/t) = p(t)`.
    pub fn is_symmetric(&self) -> bool {
        self.reciprocal() == *self
    }

    /// Normal form `u * self` with `q(1/t) = q(t)` and positive leading
    /// coefficient, together with the unit `u`.
    pub fn symmetrize(&self) -> Result<(LaurentPoly, Unit), LaurentError> {
        let top = self.top_degree()?;
        let total = self.min_exp + top;
        if total % 2 != 0 {
            return Err(LaurentError::NotSymmetrizable(self.to_string()));
        }
        let palindromic = self
            .coeffs
            .iter()
            .zip(self.coeffs.iter().rev())
            .all(|(a, b)| a == b);
        if !palindromic {
            return Err(LaurentError::NotSymmetrizable(self.to_string()));
        }
        let sign = if self.leading_coeff().is_some_and(|c| c.is_negative()) {
            -1
        } else {
            1
        };
        let unit = Unit::new(sign, -total / 2);
        Ok((unit.apply(self), unit))
    }

    /// Exact division in `Z[t, t^-1]`; `None` if `divisor` is zero or does
    /// not divide `self`.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        let dlen = divisor.coeffs.len();
        if self.coeffs.len() < dlen {
            return None;
        }
        let lead = divisor.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        let qlen = rem.len() - dlen + 1;
        let mut quot = vec![BigInt::zero(); qlen];
        for k in (0..qlen).rev() {
            let top = &rem[k + dlen - 1];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &q * d;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(LaurentPoly::new(self.min_exp - divisor.min_exp, quot))
    }
}

impl Default for LaurentPoly {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        LaurentPoly::constant(c)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.min_exp.min(rhs.min_exp);
        let hi = self.max_exp().unwrap().max(rhs.max_exp().unwrap());
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for p in [self, rhs] {
            let off = (p.min_exp - lo) as usize;
            for (i, c) in p.coeffs.iter().enumerate() {
                coeffs[off + i] += c;
            }
        }
        LaurentPoly::new(lo, coeffs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            min_exp: self.min_exp,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly::new(self.min_exp + rhs.min_exp, coeffs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(mut self) -> LaurentPoly {
        for c in &mut self.coeffs {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl std::iter::Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::one(), |acc, p| &acc * &p)
    }
}

impl<'a> std::iter::Product<&'a LaurentPoly> for LaurentPoly {
    fn product<I: Iterator<Item = &'a LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::one(), |acc, p| &acc * p)
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |acc, p| &acc + &p)
    }
}

/// Renders terms in decreasing exponent order: `2*t^3 - 5 + 2*t^-3`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (exp, c)) in self.terms().rev().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if exp == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            match exp {
                1 => f.write_str("t")?,
                e => write!(f, "t^{e}")?,
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

/// Parses the grammar produced by `Display`. Whitespace is optional, terms
/// may repeat an exponent and appear in any order, and `c t^e` may omit the
/// `*`.
impl FromStr for LaurentPoly {
    type Err = LaurentError;

    fn from_str(input: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| LaurentError::Parse {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        let raw: Vec<char> = input.chars().collect();
        let mut last_digit = false;
        let mut gap = false;
        for c in &raw {
            if c.is_whitespace() {
                gap = true;
                continue;
            }
            if c.is_ascii_digit() && last_digit && gap {
                return Err(err("whitespace inside a number"));
            }
            last_digit = c.is_ascii_digit();
            gap = false;
        }
        let s: Vec<char> = raw.into_iter().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(err("empty input"));
        }
        let mut pos = 0;
        let mut acc = LaurentPoly::zero();
        let read_digits = |pos: &mut usize| -> Option<BigInt> {
            let start = *pos;
            while *pos < s.len() && s[*pos].is_ascii_digit() {
                *pos += 1;
            }
            if start == *pos {
                None
            } else {
                s[start..*pos].iter().collect::<String>().parse().ok()
            }
        };
        while pos < s.len() {
            let mut negative = false;
            if s[pos] == '+' || s[pos] == '-' {
                negative = s[pos] == '-';
                pos += 1;
            } else if pos != 0 {
                return Err(err("expected '+' or '-' between terms"));
            }
            let coeff = read_digits(&mut pos);
            let mut exp = 0i64;
            let has_var = if pos < s.len() && s[pos] == '*' {
                if coeff.is_none() {
                    return Err(err("'*' without a coefficient"));
                }
                pos += 1;
                if pos >= s.len() || s[pos] != 't' {
                    return Err(err("expected 't' after '*'"));
                }
                true
            } else {
                pos < s.len() && s[pos] == 't'
            };
            if has_var {
                pos += 1;
                exp = 1;
                if pos < s.len() && s[pos] == '^' {
                    pos += 1;
                    let mut neg_exp = false;
                    if pos < s.len() && (s[pos] == '-' || s[pos] == '+') {
                        neg_exp = s[pos] == '-';
                        pos += 1;
                    }
                    let e = read_digits(&mut pos).ok_or_else(|| err("missing exponent"))?;
                    let e: i64 = e.try_into().map_err(|_| err("exponent out of range"))?;
                    exp = if neg_exp { -e } else { e };
                }
            } else if coeff.is_none() {
                return Err(err("expected a coefficient or 't'"));
            }
            let mut c = coeff.unwrap_or_else(BigInt::one);
            if negative {
                c = -c;
            }
            acc = &acc + &LaurentPoly::monomial(c, exp);
        }
        Ok(acc)
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl PartialOrd for LaurentPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by span, then lowest exponent, then coefficients; only used to
/// put factor lists in a stable order.
impl Ord for LaurentPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then(self.min_exp.cmp(&other.min_exp))
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}
