//! Power-series presentations of the η-inverted cohomology of `BSL_n`,
//! `BGL_n` and their products, and the splitting of `BSL_{2m}` classes by
//! the parity of the Euler class.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::bn::Twist;
use crate::error::{Error, Result};
use crate::gamma::superscript;
use crate::multipoly::{MultiPoly, Variable};

/// Generators are variables with a degree and a twist.
pub type Generator = Variable;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Part {
    Untwisted,
    /// The module `unit·⟦generators⟧` in the determinant-twisted theory.
    Twisted { unit: String },
}

/// The truncated power-series ring `⟦g₁, …, g_r⟧` over the coefficients,
/// truncated by total degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingPresentation {
    generators: Vec<Generator>,
    cap: i64,
    part: Part,
}

impl RingPresentation {
    pub fn new(generators: Vec<Generator>, cap: i64, part: Part) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for g in &generators {
            if !seen.insert(g.name.as_str()) {
                return Err(Error::DuplicateGenerator(g.name.clone()));
            }
            if g.degree <= 0 {
                return Err(Error::InvalidArgument(format!(
                    "generator {} has non-positive degree {}",
                    g.name, g.degree
                )));
            }
        }
        Ok(Self {
            generators,
            cap,
            part,
        })
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn variables(&self) -> Vec<Variable> {
        self.generators.clone()
    }

    pub fn cap(&self) -> i64 {
        self.cap
    }

    pub fn part(&self) -> &Part {
        &self.part
    }

    pub fn generator(&self, name: &str) -> Result<MultiPoly> {
        MultiPoly::var(self.variables(), name)
    }

    pub fn one(&self) -> MultiPoly {
        MultiPoly::one(self.variables())
    }

    /// Reduces a polynomial over the generators to the ring's truncation.
    pub fn element(&self, f: &MultiPoly) -> Result<MultiPoly> {
        if f.vars() != self.generators.as_slice() {
            return Err(Error::VariableMismatch);
        }
        Ok(f.truncate_degree(self.cap))
    }

    pub fn mul(&self, a: &MultiPoly, b: &MultiPoly) -> Result<MultiPoly> {
        self.element(a)?;
        a.mul_truncated(b, self.cap)
    }
}

impl fmt::Display for RingPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Part::Twisted { unit } = &self.part {
            write!(f, "{unit}·")?;
        }
        f.write_str("⟦")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str(&g.name)?;
        }
        f.write_str("⟧")
    }
}

fn subscript(n: u32) -> String {
    const DIGITS: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];
    format!("{n}")
        .bytes()
        .map(|b| DIGITS[usize::from(b - b'0')])
        .collect()
}

fn pontryagin(i: u32) -> Generator {
    Variable::new(format!("p{}", subscript(i)), 4 * i64::from(i), Twist::Untwisted)
}

fn check_rank(n: u32) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("rank must be at least 2, got {n}")));
    }
    Ok(())
}

/// `BSL_{2m}`: `⟦p₁, …, p_{m-1}, e⟧` with `deg e = 2m`; `BSL_{2m+1}`:
/// `⟦p₁, …, p_m⟧`.
pub fn bsl_presentation(n: u32, cap: i64) -> Result<RingPresentation> {
    check_rank(n)?;
    let m = n / 2;
    let mut gens: Vec<Generator> = if n % 2 == 0 {
        (1..m).map(pontryagin).collect()
    } else {
        (1..=m).map(pontryagin).collect()
    };
    if n % 2 == 0 {
        gens.push(Variable::new("e", 2 * i64::from(m), Twist::Untwisted));
    }
    RingPresentation::new(gens, cap, Part::Untwisted)
}

/// The untwisted and determinant-twisted parts for `BGL_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BglPresentation {
    pub untwisted: RingPresentation,
    /// `None` when the twisted part is the zero ring (odd `n`).
    pub twisted: Option<RingPresentation>,
}

/// `BGL_{2m}`: untwisted `⟦p₁, …, p_{m-1}, e²⟧` where `e²` is a single
/// generator of degree `4m`, and twisted `e·⟦p₁, …, p_m⟧` using `e² = p_m`.
/// `BGL_{2m+1}`: `⟦p₁, …, p_m⟧` and zero.
pub fn bgl_presentation(n: u32, cap: i64) -> Result<BglPresentation> {
    check_rank(n)?;
    let m = n / 2;
    if n % 2 == 1 {
        return Ok(BglPresentation {
            untwisted: RingPresentation::new((1..=m).map(pontryagin).collect(), cap, Part::Untwisted)?,
            twisted: None,
        });
    }
    let mut gens: Vec<Generator> = (1..m).map(pontryagin).collect();
    gens.push(Variable::new("e²", 4 * i64::from(m), Twist::Untwisted));
    Ok(BglPresentation {
        untwisted: RingPresentation::new(gens, cap, Part::Untwisted)?,
        twisted: Some(RingPresentation::new(
            (1..=m).map(pontryagin).collect(),
            cap,
            Part::Twisted { unit: "e".into() },
        )?),
    })
}

fn combine_parts(ps: &[RingPresentation]) -> Part {
    let units: Vec<&str> = ps
        .iter()
        .filter_map(|p| match &p.part {
            Part::Twisted { unit } => Some(unit.as_str()),
            Part::Untwisted => None,
        })
        .collect();
    if units.is_empty() {
        Part::Untwisted
    } else {
        Part::Twisted {
            unit: units.join("·"),
        }
    }
}

fn common_cap(ps: &[RingPresentation]) -> Result<i64> {
    let Some(first) = ps.first() else {
        return Err(Error::InvalidArgument("empty product".into()));
    };
    if let Some(p) = ps.iter().find(|p| p.cap != first.cap) {
        return Err(Error::InvalidArgument(format!(
            "factors truncated at different degrees ({} and {})",
            first.cap, p.cap
        )));
    }
    Ok(first.cap)
}

/// Completed tensor product: the power-series ring on all generators.
/// Generator names must be distinct across factors.
pub fn kunneth_product(ps: &[RingPresentation]) -> Result<RingPresentation> {
    let cap = common_cap(ps)?;
    let gens = ps.iter().flat_map(|p| p.generators.iter().cloned()).collect();
    RingPresentation::new(gens, cap, combine_parts(ps))
}

/// Like [`kunneth_product`], renaming the generators of factor `j` with a
/// superscript `⁽j⁾` (1-based) so that names never clash.
pub fn kunneth_product_indexed(ps: &[RingPresentation]) -> Result<RingPresentation> {
    let renamed: Vec<RingPresentation> = ps
        .iter()
        .enumerate()
        .map(|(j, p)| {
            let tag = format!("⁽{}⁾", superscript(j as i64 + 1));
            let rename = |s: &str| format!("{s}{tag}");
            RingPresentation {
                generators: p
                    .generators
                    .iter()
                    .map(|g| Variable::new(rename(&g.name), g.degree, g.twist))
                    .collect(),
                cap: p.cap,
                part: match &p.part {
                    Part::Untwisted => Part::Untwisted,
                    Part::Twisted { unit } => Part::Twisted { unit: rename(unit) },
                },
            }
        })
        .collect();
    kunneth_product(&renamed)
}

/// The variable list with `e` replaced by `ε` of twice its degree.
fn split_vars(vars: &[Variable], e_index: usize) -> Vec<Variable> {
    let mut out = vars.to_vec();
    let e = &vars[e_index];
    out[e_index] = Variable::new("ε", 2 * e.degree, e.twist);
    out
}

fn find(vars: &[Variable], name: &str) -> Result<usize> {
    vars.iter()
        .position(|v| v.name == name)
        .ok_or_else(|| Error::UnknownVariable(name.into()))
}

/// Writes `f = f_even(p, e²) + e·f_odd(p, e²)` and returns
/// `(f_even, f_odd)` as polynomials in the other generators and `ε = e²`.
pub fn even_odd_split(f: &MultiPoly, e_name: &str) -> Result<(MultiPoly, MultiPoly)> {
    let idx = find(f.vars(), e_name)?;
    let vars = split_vars(f.vars(), idx);
    let mut even = MultiPoly::zero(vars.clone());
    let mut odd = MultiPoly::zero(vars);
    for (exps, c) in f.terms() {
        let mut halved = exps.clone();
        halved[idx] = exps[idx] / 2;
        let target = if exps[idx] % 2 == 0 { &mut even } else { &mut odd };
        target.add_term(halved, c);
    }
    Ok((even, odd))
}

/// Inverse of [`even_odd_split`]: `e_var` is the generator that `ε`
/// replaced, at the same position.
pub fn reconstruct(f_even: &MultiPoly, f_odd: &MultiPoly, e_var: &Variable) -> Result<MultiPoly> {
    if f_even.vars() != f_odd.vars() {
        return Err(Error::VariableMismatch);
    }
    let idx = find(f_even.vars(), "ε")?;
    if f_even.vars()[idx].degree != 2 * e_var.degree {
        return Err(Error::InvalidArgument(format!(
            "ε has degree {} but {} has degree {}",
            f_even.vars()[idx].degree,
            e_var.name,
            e_var.degree
        )));
    }
    let mut vars = f_even.vars().to_vec();
    vars[idx] = e_var.clone();
    let mut out = MultiPoly::zero(vars);
    for (parity, part) in [(0, f_even), (1, f_odd)] {
        for (exps, c) in part.terms() {
            let mut doubled = exps.clone();
            doubled[idx] = 2 * exps[idx] + parity;
            out.add_term(doubled, c);
        }
    }
    Ok(out)
}

/// Total degrees of the generators, in order.
pub fn generator_degrees(p: &RingPresentation) -> Vec<(String, i64)> {
    p.generators.iter().map(|g| (g.name.clone(), g.degree)).collect()
}
