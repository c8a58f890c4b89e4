//! The formal ternary law of Witt theory: Borel classes of a triple tensor
//! product `E₁ ⊗ E₂ ⊗ E₃` of rank-2 bundles in terms of the Borel roots
//! `ξᵢ = b₁(Eᵢ)`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bn::{BnElement, Twist};
use crate::error::{Error, Result};
use crate::gamma::GammaScalar;
use crate::multipoly::{MultiPoly, Variable};

pub const ROOT_NAMES: [&str; 3] = ["ξ₁", "ξ₂", "ξ₃"];

/// The Borel roots `ξ₁, ξ₂, ξ₃`, each of degree 2.
pub fn root_vars() -> Vec<Variable> {
    ROOT_NAMES
        .iter()
        .map(|n| Variable::new(*n, 2, Twist::Untwisted))
        .collect()
}

/// Canonical representative `(n₁ ≥ n₂ ≥ n₃)` of an `S₃`-orbit of exponents.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrbitIndex([u32; 3]);

impl OrbitIndex {
    pub fn new(a: u32, b: u32, c: u32) -> Self {
        let mut e = [a, b, c];
        e.sort_unstable_by(|x, y| y.cmp(x));
        Self(e)
    }

    pub fn exponents(self) -> [u32; 3] {
        self.0
    }

    /// Distinct permutations of the exponents.
    pub fn orbit(self) -> Vec<[u32; 3]> {
        const PERMS: [[usize; 3]; 6] = [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        let mut out: Vec<[u32; 3]> = PERMS
            .iter()
            .map(|p| [self.0[p[0]], self.0[p[1]], self.0[p[2]]])
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// `σ(n₁, n₂, n₃)`: the sum of the distinct monomials in the orbit.
pub fn orbit_sum(idx: OrbitIndex) -> MultiPoly {
    MultiPoly::from_terms(
        root_vars(),
        idx.orbit().into_iter().map(|e| (e.to_vec(), GammaScalar::one())),
    )
    .expect("three exponents for three roots")
}

fn sigma(a: u32, b: u32, c: u32) -> MultiPoly {
    orbit_sum(OrbitIndex::new(a, b, c))
}

fn gamma() -> GammaScalar {
    GammaScalar::gamma_pow(1)
}

/// `b_i(E₁ ⊗ E₂ ⊗ E₃)` for `i = 1..=4`:
///
/// ```text
/// b₁ = γσ(1,1,1)
/// b₂ = γσ(2,2,0) - 2σ(2,0,0)
/// b₃ = γσ(3,1,1) - 8σ(1,1,1)
/// b₄ = γσ(2,2,2) + σ(4,0,0) - 2σ(2,2,0)
/// ```
pub fn triple_borel(i: u32) -> Result<MultiPoly> {
    let c = |n: i64| GammaScalar::constant(n);
    let p = match i {
        1 => sigma(1, 1, 1).scale(&gamma()),
        2 => sigma(2, 2, 0)
            .scale(&gamma())
            .add(&sigma(2, 0, 0).scale(&c(-2)))?,
        3 => sigma(3, 1, 1)
            .scale(&gamma())
            .add(&sigma(1, 1, 1).scale(&c(-8)))?,
        4 => sigma(2, 2, 2)
            .scale(&gamma())
            .add(&sigma(4, 0, 0))?
            .add(&sigma(2, 2, 0).scale(&c(-2)))?,
        _ => {
            return Err(Error::InvalidArgument(alloc::format!(
                "Borel class index {i} is outside 1..=4"
            )))
        }
    };
    Ok(p)
}

/// Evaluates [`triple_borel`] at the given Borel roots.
pub fn triple_borel_eval(i: u32, roots: [&BnElement; 3]) -> Result<BnElement> {
    let cap = roots[0].cap();
    for r in &roots[1..] {
        if r.cap() != cap {
            return Err(Error::CapMismatch(cap, r.cap()));
        }
    }
    let assignment: BTreeMap<String, BnElement> = ROOT_NAMES
        .iter()
        .zip(roots)
        .map(|(n, r)| (String::from(*n), r.clone()))
        .collect();
    let poly = triple_borel(i)?;
    let value = poly.substitute(&assignment, cap)?;
    // a vanishing sum keeps the twist its monomials would have had
    let exps = poly.terms().next().map(|(e, _)| e.clone()).unwrap_or_default();
    let twist = exps
        .iter()
        .zip(&roots)
        .fold(Twist::Untwisted, |t, (e, r)| t + r.twist().times(u64::from(*e)));
    value.with_twist(twist)
}

/// The relation `ζⁿ - b₁ζⁿ⁻¹ + b₂ζⁿ⁻² - … + (-1)ⁿbₙ = 0` satisfied by the
/// Borel class `ζ` of the tautological bundle on the quaternionic projective
/// bundle. `coeffs[k]` is the coefficient of `ζᵏ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BorelRelation {
    coeffs: Vec<BnElement>,
}

pub fn borel_defining_polynomial(classes: &[BnElement], cap: u32) -> Result<BorelRelation> {
    for b in classes {
        if b.cap() != cap {
            return Err(Error::CapMismatch(cap, b.cap()));
        }
    }
    let n = classes.len();
    let mut coeffs = vec![BnElement::zero(Twist::Untwisted, cap); n + 1];
    coeffs[n] = BnElement::one(cap);
    for (j, b) in classes.iter().enumerate() {
        let j = j + 1;
        coeffs[n - j] = if j % 2 == 0 { b.clone() } else { -b };
    }
    Ok(BorelRelation { coeffs })
}

impl BorelRelation {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `ζᵏ`.
    pub fn coefficient(&self, k: usize) -> Option<&BnElement> {
        self.coeffs.get(k)
    }

    /// Substitutes a class for `ζ`.
    pub fn evaluate(&self, zeta: &BnElement) -> Result<BnElement> {
        let mut acc: Option<BnElement> = None;
        let mut power = BnElement::one(zeta.cap());
        for c in &self.coeffs {
            let term = c.mul(&power)?;
            acc = Some(match acc {
                None => term,
                Some(s) if s.is_zero() && s.twist() != term.twist() => term,
                Some(s) if term.is_zero() && s.twist() != term.twist() => s,
                Some(s) => s.add(&term)?,
            });
            power = power.mul(zeta)?;
        }
        Ok(acc.expect("at least the leading coefficient"))
    }
}

impl fmt::Display for BorelRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let zeta = match k {
                0 => String::new(),
                1 => String::from("ζ"),
                _ => alloc::format!("ζ{}", crate::gamma::superscript(k as i64)),
            };
            if c == &BnElement::one(c.cap()) && k > 0 {
                f.write_str(&zeta)?;
            } else if k == 0 {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c}){zeta}")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}
