//! Laurent polynomials in the Bott element γ with integer coefficients.

use alloc::collections::BTreeMap;
use alloc::string::String;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Degree of γ in the collapsed single grading.
pub const GAMMA_DEGREE: i64 = -4;

/// An element of `ℤ[γ, γ⁻¹]`.
///
/// Terms are keyed by γ-exponent; zero coefficients are never stored, so the
/// derived equality is equality of Laurent polynomials.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GammaScalar {
    terms: BTreeMap<i64, BigInt>,
}

impl GammaScalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// `c·γ^exp`.
    pub fn monomial(c: impl Into<BigInt>, exp: i64) -> Self {
        let mut s = Self::zero();
        s.add_term(exp, c.into());
        s
    }

    /// `γ^exp`.
    pub fn gamma_pow(exp: i64) -> Self {
        Self::monomial(1, exp)
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut s = Self::zero();
        for (exp, c) in terms {
            s.add_term(exp, c.into());
        }
        s
    }

    fn add_term(&mut self, exp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// `(exponent, coefficient)` pairs in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Returns the single term if the scalar is a monomial `c·γ^k`.
    pub fn as_monomial(&self) -> Option<(i64, &BigInt)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (*e, c))
        } else {
            None
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// Multiplies by `γ^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Sets γ = 0. Fails if a negative power of γ is present.
    pub fn specialize_zero(&self) -> Result<BigInt> {
        if let Some(min) = self.min_exponent() {
            if min < 0 {
                return Err(Error::NegativeGammaPower(min));
            }
        }
        Ok(self.coeff(0))
    }

    /// Drops all terms with positive γ-exponent, keeping the constant term.
    pub(crate) fn drop_positive(&self) -> Result<Self> {
        self.specialize_zero().map(Self::constant)
    }

    /// Exact division by an integer; fails unless every coefficient divides.
    pub fn div_exact(&self, d: &BigInt) -> Result<Self> {
        let mut out = BTreeMap::new();
        for (e, c) in &self.terms {
            if d.is_zero() || !(c % d).is_zero() {
                return Err(Error::NotDivisible(alloc::format!("{self} by {d}")));
            }
            out.insert(*e, c / d);
        }
        Ok(Self { terms: out })
    }

    /// Content-free sign: sign of the lowest-exponent coefficient.
    pub fn leading_sign(&self) -> i32 {
        match self.terms.values().next() {
            Some(c) if c.is_negative() => -1,
            Some(_) => 1,
            None => 0,
        }
    }

    /// Degrees of the terms under `deg γ = -4`.
    pub fn term_degrees(&self) -> impl Iterator<Item = i64> + '_ {
        self.terms.keys().map(|e| e * GAMMA_DEGREE)
    }

    #[cfg(test)]
    pub(crate) fn render(&self) -> String {
        alloc::format!("{self}")
    }
}

impl Zero for GammaScalar {
    fn zero() -> Self {
        GammaScalar::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for GammaScalar {
    fn one() -> Self {
        GammaScalar::one()
    }
}

impl From<i64> for GammaScalar {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<BigInt> for GammaScalar {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

impl Add<&GammaScalar> for &GammaScalar {
    type Output = GammaScalar;
    fn add(self, rhs: &GammaScalar) -> GammaScalar {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for GammaScalar {
    type Output = GammaScalar;
    fn add(mut self, rhs: GammaScalar) -> GammaScalar {
        self += &rhs;
        self
    }
}

impl AddAssign<&GammaScalar> for GammaScalar {
    fn add_assign(&mut self, rhs: &GammaScalar) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl Neg for &GammaScalar {
    type Output = GammaScalar;
    fn neg(self) -> GammaScalar {
        GammaScalar {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for GammaScalar {
    type Output = GammaScalar;
    fn neg(self) -> GammaScalar {
        -&self
    }
}

impl Sub<&GammaScalar> for &GammaScalar {
    type Output = GammaScalar;
    fn sub(self, rhs: &GammaScalar) -> GammaScalar {
        self + &(-rhs)
    }
}

impl Sub for GammaScalar {
    type Output = GammaScalar;
    fn sub(self, rhs: GammaScalar) -> GammaScalar {
        &self - &rhs
    }
}

impl Mul<&GammaScalar> for &GammaScalar {
    type Output = GammaScalar;
    fn mul(self, rhs: &GammaScalar) -> GammaScalar {
        let mut out = GammaScalar::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Mul for GammaScalar {
    type Output = GammaScalar;
    fn mul(self, rhs: GammaScalar) -> GammaScalar {
        &self * &rhs
    }
}

/// Writes `γ^k` in unicode, e.g. `γ`, `γ²`, `γ⁻¹`.
pub(crate) fn write_gamma_power(f: &mut fmt::Formatter<'_>, k: i64) -> fmt::Result {
    match k {
        0 => Ok(()),
        1 => f.write_str("γ"),
        _ => write!(f, "γ{}", superscript(k)),
    }
}

pub(crate) fn superscript(n: i64) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    let mut s = String::new();
    if n < 0 {
        s.push('⁻');
    }
    for ch in alloc::format!("{}", n.unsigned_abs()).chars() {
        s.push(DIGITS[ch.to_digit(10).unwrap() as usize]);
    }
    s
}

impl fmt::Display for GammaScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if !mag.is_one() || *e == 0 {
                write!(f, "{mag}")?;
            }
            write_gamma_power(f, *e)?;
        }
        Ok(())
    }
}
