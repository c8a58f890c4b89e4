//! The twist-graded ring of Witt-theory classes of `BN`.
//!
//! An element is either untwisted, a truncated power series `f(e)`, or
//! twisted by the nontrivial line bundle, `ẽ·f(e)`. Only the cofactor `f` is
//! stored; `ẽ` never appears as a variable. A product of two twisted
//! elements uses the relation `ẽ² = -4e² + γe⁴` and lands in the untwisted
//! part.

use alloc::collections::BTreeMap;
use alloc::string::String;
use core::fmt;
use core::ops::Neg;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::gamma::{superscript, write_gamma_power, GammaScalar};

/// Degree of `e` and of `ẽ`.
pub const E_DEGREE: i64 = 2;

/// Class in `Pic(BN) ≅ ℤ/2`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Twist {
    #[default]
    Untwisted,
    Twisted,
}

impl Twist {
    pub fn from_parity(n: i64) -> Self {
        if n.rem_euclid(2) == 0 {
            Twist::Untwisted
        } else {
            Twist::Twisted
        }
    }

    pub fn as_u8(self) -> u8 {
        match self {
            Twist::Untwisted => 0,
            Twist::Twisted => 1,
        }
    }

    /// `k·self` in `ℤ/2`.
    pub fn times(self, k: u64) -> Self {
        if k % 2 == 0 {
            Twist::Untwisted
        } else {
            self
        }
    }
}

impl core::ops::Add for Twist {
    type Output = Twist;
    fn add(self, rhs: Twist) -> Twist {
        Twist::from_parity(i64::from(self.as_u8() + rhs.as_u8()))
    }
}

impl fmt::Display for Twist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_u8())
    }
}

/// Result of [`BnElement::degree_of`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Degree {
    Homogeneous(i64),
    Inhomogeneous,
    /// The zero element is homogeneous of every degree.
    Zero,
}

type Series = BTreeMap<u32, GammaScalar>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BnElement {
    twist: Twist,
    cap: u32,
    terms: Series,
}

fn add_into(terms: &mut Series, exp: u32, c: &GammaScalar) {
    if c.is_zero() {
        return;
    }
    let slot = terms.entry(exp).or_default();
    *slot += c;
    if slot.is_zero() {
        terms.remove(&exp);
    }
}

fn series_mul(a: &Series, b: &Series, cap: u32) -> Series {
    let mut out = Series::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let exp = u64::from(*ea) + u64::from(*eb);
            if exp > u64::from(cap) {
                break;
            }
            add_into(&mut out, exp as u32, &(ca * cb));
        }
    }
    out
}

/// The cofactor of `ẽ²`, i.e. `-4e² + γe⁴`.
fn e_tilde_squared() -> Series {
    let mut s = Series::new();
    s.insert(2, GammaScalar::constant(-4));
    s.insert(4, GammaScalar::gamma_pow(1));
    s
}

impl BnElement {
    pub fn zero(twist: Twist, cap: u32) -> Self {
        Self {
            twist,
            cap,
            terms: Series::new(),
        }
    }

    pub fn one(cap: u32) -> Self {
        Self::monomial(Twist::Untwisted, 0, GammaScalar::one(), cap)
    }

    /// `e`, the Euler class of `Õ⁺(1)`.
    pub fn e(cap: u32) -> Self {
        Self::monomial(Twist::Untwisted, 1, GammaScalar::one(), cap)
    }

    /// `ẽ`, the Euler class of `Õ⁺(2)`.
    pub fn e_tilde(cap: u32) -> Self {
        Self::monomial(Twist::Twisted, 0, GammaScalar::one(), cap)
    }

    /// `coeff·e^exp` (times `ẽ` when twisted). Dropped if `exp > cap`.
    pub fn monomial(twist: Twist, exp: u32, coeff: GammaScalar, cap: u32) -> Self {
        Self::from_terms(twist, cap, [(exp, coeff)])
    }

    /// Builds an element from `(e-exponent, coefficient)` pairs, summing
    /// repeats and discarding exponents above `cap`.
    pub fn from_terms<I>(twist: Twist, cap: u32, terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, GammaScalar)>,
    {
        let mut out = Self::zero(twist, cap);
        for (exp, c) in terms {
            if exp <= cap {
                add_into(&mut out.terms, exp, &c);
            }
        }
        out
    }

    /// Like [`from_terms`](Self::from_terms) with integer coefficients of
    /// `γ^k e^j`, given as `(j, k, c)`.
    pub fn from_int_terms<I, C>(twist: Twist, cap: u32, terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, i64, C)>,
        C: Into<BigInt>,
    {
        Self::from_terms(
            twist,
            cap,
            terms
                .into_iter()
                .map(|(j, k, c)| (j, GammaScalar::monomial(c, k))),
        )
    }

    pub fn twist(&self) -> Twist {
        self.twist
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(e-exponent, coefficient)` pairs in ascending order. For a twisted
    /// element these are the terms of the cofactor of `ẽ`.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &GammaScalar)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exp: u32) -> GammaScalar {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    /// Lowest-order term in `e`.
    pub fn lowest_term(&self) -> Option<(u32, &GammaScalar)> {
        self.terms.iter().next().map(|(e, c)| (*e, c))
    }

    pub fn highest_exponent(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    fn check_cap(&self, other: &Self) -> Result<()> {
        if self.cap != other.cap {
            return Err(Error::CapMismatch(self.cap, other.cap));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_cap(other)?;
        if self.twist != other.twist {
            return Err(Error::TwistMismatch(self.twist, other.twist));
        }
        let mut out = self.clone();
        for (e, c) in &other.terms {
            add_into(&mut out.terms, *e, c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&-other)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_cap(other)?;
        let mut terms = series_mul(&self.terms, &other.terms, self.cap);
        let both_twisted = self.twist == Twist::Twisted && other.twist == Twist::Twisted;
        if both_twisted {
            terms = series_mul(&terms, &e_tilde_squared(), self.cap);
        }
        Ok(Self {
            twist: self.twist + other.twist,
            cap: self.cap,
            terms,
        })
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.cap);
        for _ in 0..k {
            acc = acc.mul(self).expect("caps agree");
        }
        acc
    }

    /// Multiplies every coefficient by a scalar.
    pub fn scale(&self, c: &GammaScalar) -> Self {
        let mut out = Self::zero(self.twist, self.cap);
        for (e, x) in &self.terms {
            add_into(&mut out.terms, *e, &(x * c));
        }
        out
    }

    pub fn scale_int(&self, c: impl Into<BigInt>) -> Self {
        self.scale(&GammaScalar::constant(c))
    }

    /// Multiplies by `e^k`, discarding overflow past the cap.
    pub fn shift_e(&self, k: u32) -> Self {
        Self::from_terms(
            self.twist,
            self.cap,
            self.terms.iter().map(|(e, c)| (e + k, c.clone())),
        )
    }

    /// Exact division by `γ^gamma_exp·e^e_exp`.
    pub fn divide_monomial(&self, e_exp: u32, gamma_exp: i64) -> Result<Self> {
        let mut out = Self::zero(self.twist, self.cap);
        for (e, c) in &self.terms {
            let Some(j) = e.checked_sub(e_exp) else {
                return Err(Error::NotDivisible(alloc::format!(
                    "{self} by e^{e_exp}"
                )));
            };
            out.terms.insert(j, c.shift(-gamma_exp));
        }
        Ok(out)
    }

    /// Reinterprets the element at another cap. Shrinking discards higher
    /// terms; growing does not recover anything already discarded.
    pub fn truncate(&self, cap: u32) -> Self {
        Self {
            twist: self.twist,
            cap,
            terms: self.terms.range(..=cap).map(|(e, c)| (*e, c.clone())).collect(),
        }
    }

    pub fn with_twist(&self, twist: Twist) -> Result<Self> {
        if self.is_zero() || twist == self.twist {
            Ok(Self {
                twist,
                ..self.clone()
            })
        } else {
            Err(Error::TwistMismatch(self.twist, twist))
        }
    }

    /// Sets γ = 0, the passage to Witt-sheaf cohomology.
    pub fn specialize_gamma_zero(&self) -> Result<Self> {
        let mut out = Self::zero(self.twist, self.cap);
        for (e, c) in &self.terms {
            add_into(&mut out.terms, *e, &c.drop_positive()?);
        }
        Ok(out)
    }

    /// Degree under `deg e = deg ẽ = 2`, `deg γ = -4`.
    pub fn degree_of(&self) -> Degree {
        let base = match self.twist {
            Twist::Untwisted => 0,
            Twist::Twisted => E_DEGREE,
        };
        let mut degree = None;
        for (e, c) in &self.terms {
            for d in c.term_degrees() {
                let total = base + E_DEGREE * i64::from(*e) + d;
                match degree {
                    None => degree = Some(total),
                    Some(prev) if prev != total => return Degree::Inhomogeneous,
                    Some(_) => {}
                }
            }
        }
        degree.map_or(Degree::Zero, Degree::Homogeneous)
    }

    /// Unicode rendering, the same as `Display`.
    pub fn render(&self) -> String {
        alloc::format!("{self}")
    }
}

impl Neg for &BnElement {
    type Output = BnElement;
    fn neg(self) -> BnElement {
        BnElement {
            twist: self.twist,
            cap: self.cap,
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for BnElement {
    type Output = BnElement;
    fn neg(self) -> BnElement {
        -&self
    }
}

fn write_e_power(f: &mut fmt::Formatter<'_>, k: u32) -> fmt::Result {
    match k {
        0 => Ok(()),
        1 => f.write_str("e"),
        _ => write!(f, "e{}", superscript(i64::from(k))),
    }
}

/// Writes the series `Σ c_j e^j` in ascending order.
fn write_series(f: &mut fmt::Formatter<'_>, terms: &Series) -> fmt::Result {
    for (i, (exp, c)) in terms.iter().enumerate() {
        if let Some((gexp, coeff)) = c.as_monomial() {
            let neg = coeff.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = coeff.abs();
            if !mag.is_one() || (gexp == 0 && *exp == 0) {
                write!(f, "{mag}")?;
            }
            write_gamma_power(f, gexp)?;
        } else {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})")?;
        }
        write_e_power(f, *exp)?;
    }
    Ok(())
}

impl fmt::Display for BnElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        match self.twist {
            Twist::Untwisted => write_series(f, &self.terms),
            Twist::Twisted => {
                if self.terms.len() == 1 {
                    let (exp, c) = self.terms.iter().next().unwrap();
                    if let Some((gexp, coeff)) = c.as_monomial() {
                        if coeff.is_negative() {
                            f.write_str("-")?;
                        }
                        let mag = coeff.abs();
                        if !mag.is_one() {
                            write!(f, "{mag}")?;
                        }
                        write_gamma_power(f, gexp)?;
                        f.write_str("ẽ")?;
                        return write_e_power(f, *exp);
                    }
                }
                f.write_str("ẽ(")?;
                write_series(f, &self.terms)?;
                f.write_str(")")
            }
        }
    }
}

impl GammaScalar {
    /// Embeds the scalar as a constant of the untwisted part.
    pub fn to_bn(&self, cap: u32) -> BnElement {
        BnElement::monomial(Twist::Untwisted, 0, self.clone(), cap)
    }
}
