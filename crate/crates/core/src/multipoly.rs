//! Multivariate polynomials with [`GammaScalar`] coefficients.
//!
//! Each variable carries a degree and a twist, so a polynomial can be
//! evaluated in the `BN` ring ([`MultiPoly::substitute`]) or truncated by
//! weighted total degree (power-series presentations).

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed};

use crate::bn::{BnElement, Degree, Twist};
use crate::error::{Error, Result};
use crate::gamma::{superscript, write_gamma_power, GammaScalar};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Variable {
    pub name: String,
    pub degree: i64,
    pub twist: Twist,
}

impl Variable {
    pub fn new(name: impl Into<String>, degree: i64, twist: Twist) -> Self {
        Self {
            name: name.into(),
            degree,
            twist,
        }
    }
}

pub type Exponents = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    vars: Vec<Variable>,
    terms: BTreeMap<Exponents, GammaScalar>,
}

impl MultiPoly {
    pub fn zero(vars: Vec<Variable>) -> Self {
        Self {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: Vec<Variable>, c: GammaScalar) -> Self {
        let n = vars.len();
        let mut p = Self::zero(vars);
        p.add_term(vec![0; n], &c);
        p
    }

    pub fn one(vars: Vec<Variable>) -> Self {
        Self::constant(vars, GammaScalar::one())
    }

    pub fn monomial(vars: Vec<Variable>, exps: Exponents, c: GammaScalar) -> Result<Self> {
        if exps.len() != vars.len() {
            return Err(Error::VariableMismatch);
        }
        let mut p = Self::zero(vars);
        p.add_term(exps, &c);
        Ok(p)
    }

    /// The polynomial consisting of the single variable `name`.
    pub fn var(vars: Vec<Variable>, name: &str) -> Result<Self> {
        let idx = vars
            .iter()
            .position(|v| v.name == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        let mut exps = vec![0; vars.len()];
        exps[idx] = 1;
        Self::monomial(vars, exps, GammaScalar::one())
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs.
    pub fn from_terms<I>(vars: Vec<Variable>, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Exponents, GammaScalar)>,
    {
        let mut p = Self::zero(vars);
        for (exps, c) in terms {
            if exps.len() != p.vars.len() {
                return Err(Error::VariableMismatch);
            }
            p.add_term(exps, &c);
        }
        Ok(p)
    }

    pub(crate) fn add_term(&mut self, exps: Exponents, c: &GammaScalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exps.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn vars(&self) -> &[Variable] {
        &self.vars
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponents, &GammaScalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> GammaScalar {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    fn check_vars(&self, other: &Self) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::VariableMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (exps, c) in &other.terms {
            out.add_term(exps.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &GammaScalar) -> Self {
        let mut out = Self::zero(self.vars.clone());
        for (exps, x) in &self.terms {
            out.add_term(exps.clone(), &(x * c));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = Self::zero(self.vars.clone());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(exps, &(ca * cb));
            }
        }
        Ok(out)
    }

    /// Product followed by [`truncate_degree`](Self::truncate_degree).
    pub fn mul_truncated(&self, other: &Self, cap: i64) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = Self::zero(self.vars.clone());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps: Exponents = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                if self.monomial_degree(&exps) <= cap {
                    out.add_term(exps, &(ca * cb));
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.vars.clone());
        for _ in 0..k {
            acc = acc.mul(self).expect("same variables");
        }
        acc
    }

    /// Weighted degree of a monomial, ignoring its coefficient.
    pub fn monomial_degree(&self, exps: &[u32]) -> i64 {
        exps.iter()
            .zip(&self.vars)
            .map(|(e, v)| i64::from(*e) * v.degree)
            .sum()
    }

    /// Twist of a monomial: `Σ exponent·twist` mod 2.
    pub fn monomial_twist(&self, exps: &[u32]) -> Twist {
        exps.iter()
            .zip(&self.vars)
            .fold(Twist::Untwisted, |t, (e, v)| t + v.twist.times(u64::from(*e)))
    }

    /// Drops monomials whose weighted degree exceeds `cap`.
    pub fn truncate_degree(&self, cap: i64) -> Self {
        Self {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| self.monomial_degree(e) <= cap)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Degree with `deg γ = -4` and the variable degrees.
    pub fn degree_of(&self) -> Degree {
        let mut degree = None;
        for (exps, c) in &self.terms {
            let base = self.monomial_degree(exps);
            for d in c.term_degrees() {
                let total = base + d;
                match degree {
                    None => degree = Some(total),
                    Some(prev) if prev != total => return Degree::Inhomogeneous,
                    Some(_) => {}
                }
            }
        }
        degree.map_or(Degree::Zero, Degree::Homogeneous)
    }

    /// Sets γ = 0 in every coefficient.
    pub fn specialize_gamma_zero(&self) -> Result<Self> {
        let mut out = Self::zero(self.vars.clone());
        for (exps, c) in &self.terms {
            out.add_term(exps.clone(), &c.drop_positive()?);
        }
        Ok(out)
    }

    /// Renames variables by a permutation: variable `i` becomes variable
    /// `perm[i]`. Degrees and twists stay attached to positions.
    pub fn permute(&self, perm: &[usize]) -> Result<Self> {
        let n = self.vars.len();
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || core::mem::replace(&mut seen[p], true)) {
            return Err(Error::InvalidArgument("not a permutation".into()));
        }
        let mut out = Self::zero(self.vars.clone());
        for (exps, c) in &self.terms {
            let mut moved = vec![0; n];
            for (i, e) in exps.iter().enumerate() {
                moved[perm[i]] = *e;
            }
            out.add_term(moved, c);
        }
        Ok(out)
    }

    /// Rewrites the polynomial over a larger variable list, matching
    /// variables by name. Every variable must exist in `target` with the
    /// same degree and twist.
    pub fn embed(&self, target: &[Variable]) -> Result<Self> {
        let map: Vec<usize> = self
            .vars
            .iter()
            .map(|v| {
                target
                    .iter()
                    .position(|t| t == v)
                    .ok_or_else(|| Error::UnknownVariable(v.name.clone()))
            })
            .collect::<Result<_>>()?;
        let mut out = Self::zero(target.to_vec());
        for (exps, c) in &self.terms {
            let mut wide = vec![0; target.len()];
            for (i, e) in exps.iter().enumerate() {
                wide[map[i]] = *e;
            }
            out.add_term(wide, c);
        }
        Ok(out)
    }

    /// Evaluates the polynomial in the `BN` ring. Every variable needs a
    /// value with cap `cap`, and all monomials must land in one twist.
    pub fn substitute(&self, assignment: &BTreeMap<String, BnElement>, cap: u32) -> Result<BnElement> {
        let values: Vec<&BnElement> = self
            .vars
            .iter()
            .map(|v| {
                assignment
                    .get(&v.name)
                    .ok_or_else(|| Error::UnassignedVariable(v.name.clone()))
            })
            .collect::<Result<_>>()?;
        for val in &values {
            if val.cap() != cap {
                return Err(Error::CapMismatch(val.cap(), cap));
            }
        }
        // powers[i][k] = values[i]^k, grown on demand
        let mut powers: Vec<Vec<BnElement>> = values
            .iter()
            .map(|_| vec![BnElement::one(cap)])
            .collect();
        let mut acc: Option<BnElement> = None;
        for (exps, c) in &self.terms {
            let mut term = c.to_bn(cap);
            for (i, &k) in exps.iter().enumerate() {
                while powers[i].len() <= k as usize {
                    let next = powers[i].last().unwrap().mul(values[i])?;
                    powers[i].push(next);
                }
                term = term.mul(&powers[i][k as usize])?;
            }
            acc = Some(match acc {
                None => term,
                Some(sum) => sum.add(&term)?,
            });
        }
        Ok(acc.unwrap_or_else(|| BnElement::zero(Twist::Untwisted, cap)))
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (exps, c)) in self.terms.iter().rev().enumerate() {
            let is_const = exps.iter().all(|e| *e == 0);
            match c.as_monomial() {
                Some((gexp, coeff)) => {
                    let neg = coeff.is_negative();
                    match (i, neg) {
                        (0, true) => f.write_str("-")?,
                        (0, false) => {}
                        (_, true) => f.write_str(" - ")?,
                        (_, false) => f.write_str(" + ")?,
                    }
                    let mag = coeff.abs();
                    if !mag.is_one() || (gexp == 0 && is_const) {
                        write!(f, "{mag}")?;
                    }
                    write_gamma_power(f, gexp)?;
                }
                None => {
                    if i > 0 {
                        f.write_str(" + ")?;
                    }
                    write!(f, "({c})")?;
                }
            }
            for (e, v) in exps.iter().zip(&self.vars) {
                match e {
                    0 => {}
                    1 => f.write_str(&v.name)?,
                    _ => write!(f, "{}{}", v.name, superscript(i64::from(*e)))?,
                }
            }
        }
        Ok(())
    }
}
