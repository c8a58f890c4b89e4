//! Representations of `N = T ⋊ ⟨σ⟩ ⊂ SL₂`.
//!
//! A representation is given in a basis of torus weight vectors: `ι(t)` acts
//! on basis vector `j` by `t^weights[j]`, and `σ` by a rational matrix. Each
//! representation also carries an invariant bilinear form, which fixes the
//! orientation of its rank-2 summands: `Õ⁺(m)` and `Õ⁻(m)` are isomorphic as
//! representations and differ only by the orientation of the determinant.

mod decompose;
pub mod matrix;

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::bn::Twist;
use crate::error::{Error, Result};
pub use decompose::{classify_line, classify_plane, decompose, Decomposition, Summand};
use matrix::{add_entry, q, SparseMatrix, SparseVec, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Orientation {
    Plus,
    Minus,
}

impl Orientation {
    pub fn sign(self) -> i64 {
        match self {
            Orientation::Plus => 1,
            Orientation::Minus => -1,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Orientation::Plus => '+',
            Orientation::Minus => '-',
        }
    }
}

/// An irreducible representation of `N` with a chosen determinant
/// orientation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IrrepLabel {
    /// `ρ^±_m` on `k²`, the representation inducing `Õ^±(m)`.
    TwoDim(u32, Orientation),
    Trivial,
    /// `σ ↦ -1`, trivial on the torus.
    Sign,
}

impl IrrepLabel {
    pub fn rank(self) -> usize {
        match self {
            IrrepLabel::TwoDim(..) => 2,
            IrrepLabel::Trivial | IrrepLabel::Sign => 1,
        }
    }

    /// Twist of the determinant line bundle in `Pic(BN) ≅ ℤ/2`.
    pub fn determinant_twist(self) -> Twist {
        match self {
            IrrepLabel::TwoDim(m, _) => Twist::from_parity(i64::from(m) + 1),
            IrrepLabel::Trivial => Twist::Untwisted,
            IrrepLabel::Sign => Twist::Twisted,
        }
    }

    fn sort_key(self) -> (u8, core::cmp::Reverse<u32>, Orientation) {
        match self {
            IrrepLabel::TwoDim(m, o) => (0, core::cmp::Reverse(m), o),
            IrrepLabel::Trivial => (1, core::cmp::Reverse(0), Orientation::Plus),
            IrrepLabel::Sign => (2, core::cmp::Reverse(0), Orientation::Plus),
        }
    }
}

/// Canonical order: rank-2 summands by decreasing `m` (`+` before `-`), then
/// trivial, then sign.
impl Ord for IrrepLabel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for IrrepLabel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for IrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IrrepLabel::TwoDim(m, o) => write!(f, "O{}({m})", o.symbol()),
            IrrepLabel::Trivial => f.write_str("triv"),
            IrrepLabel::Sign => f.write_str("sign"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NRep {
    weights: Vec<i64>,
    sigma: SparseMatrix,
    form: SparseMatrix,
}

impl NRep {
    /// Checks torus equivariance of `σ` and of the form, and that
    /// `σ² = ι(-1)`.
    pub fn new(weights: Vec<i64>, sigma: SparseMatrix, form: SparseMatrix) -> Result<Self> {
        let rep = Self {
            weights,
            sigma,
            form,
        };
        rep.check_invariants()?;
        Ok(rep)
    }

    pub fn check_invariants(&self) -> Result<()> {
        let n = self.weights.len();
        if n == 0 {
            return Err(Error::Representation("dimension must be positive".into()));
        }
        if self.sigma.dim() != n || self.form.dim() != n {
            return Err(Error::Representation(format!(
                "{n} weights but σ is {0}×{0} and the form {1}×{1}",
                self.sigma.dim(),
                self.form.dim()
            )));
        }
        for (i, j, _) in self.sigma.entries() {
            if self.weights[i] != -self.weights[j] {
                return Err(Error::Representation(format!(
                    "σ maps weight {} into weight {}",
                    self.weights[j], self.weights[i]
                )));
            }
        }
        for (i, j, _) in self.form.entries() {
            if self.weights[i] != -self.weights[j] {
                return Err(Error::Representation(format!(
                    "form pairs weights {} and {}",
                    self.weights[i], self.weights[j]
                )));
            }
        }
        let expected = SparseMatrix::diagonal(
            self.weights
                .iter()
                .map(|w| if w.rem_euclid(2) == 0 { q(1) } else { q(-1) }),
        );
        if self.sigma.compose(&self.sigma) != expected {
            return Err(Error::Representation("σ² differs from ι(-1)".into()));
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn sigma(&self) -> &SparseMatrix {
        &self.sigma
    }

    pub fn form(&self) -> &SparseMatrix {
        &self.form
    }

    /// Twist of `det` of the induced bundle, read off from `det σ = ±1`.
    pub fn determinant_twist(&self) -> Twist {
        if self.sigma.determinant().is_negative() {
            Twist::Twisted
        } else {
            Twist::Untwisted
        }
    }
}

/// The model matrices of an irreducible representation.
pub fn make_irrep(label: IrrepLabel) -> Result<NRep> {
    match label {
        IrrepLabel::TwoDim(0, _) => Err(Error::InvalidArgument(
            "rank-2 irreducibles need m >= 1".into(),
        )),
        IrrepLabel::TwoDim(m, o) => {
            let m = i64::from(m);
            let s = o.sign();
            let parity = if m % 2 == 0 { 1 } else { -1 };
            let mut sigma = SparseMatrix::zero(2);
            sigma.set(0, 1, q(s));
            sigma.set(1, 0, q(s * parity));
            let form = SparseMatrix::from_rows(&[&[0, 1], &[-1, 0]]);
            NRep::new(vec![m, -m], sigma, form)
        }
        IrrepLabel::Trivial => NRep::new(vec![0], SparseMatrix::identity(1), SparseMatrix::identity(1)),
        IrrepLabel::Sign => NRep::new(
            vec![0],
            SparseMatrix::diagonal([q(-1)]),
            SparseMatrix::identity(1),
        ),
    }
}

/// Tensor product; basis vector `(i, j)` has index `i * r2.dim() + j`.
pub fn tensor(r1: &NRep, r2: &NRep) -> NRep {
    let weights = r1
        .weights
        .iter()
        .flat_map(|a| r2.weights.iter().map(move |b| a + b))
        .collect();
    NRep {
        weights,
        sigma: r1.sigma.kron(&r2.sigma),
        form: r1.form.kron(&r2.form),
    }
}

pub fn direct_sum(r1: &NRep, r2: &NRep) -> NRep {
    let mut weights = r1.weights.clone();
    weights.extend_from_slice(&r2.weights);
    NRep {
        weights,
        sigma: r1.sigma.block_diag(&r2.sigma),
        form: r1.form.block_diag(&r2.form),
    }
}

/// Exponent vectors of degree-`k` monomials in `d` variables, with the
/// first variable's exponent decreasing first (`x₁^k` comes first).
pub fn sym_monomials(d: usize, k: u32) -> Vec<Vec<u32>> {
    fn rec(d: usize, k: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if d == 1 {
            prefix.push(k);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for a in (0..=k).rev() {
            prefix.push(a);
            rec(d - 1, k - a, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(d, k, &mut Vec::new(), &mut out);
    out
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// `Sym^k`, in the basis of monomials `x^α` (see [`sym_monomials`]).
///
/// `σ` acts by substitution. The form is the restriction of `ω^{⊗k}` to
/// symmetric tensors, where `x^α` stands for the symmetrisation of any word
/// with content `α`.
pub fn sym_power(r: &NRep, k: u32) -> NRep {
    let d = r.dim();
    let basis = sym_monomials(d, k);
    let index: BTreeMap<&[u32], usize> = basis
        .iter()
        .enumerate()
        .map(|(i, a)| (a.as_slice(), i))
        .collect();
    let weights: Vec<i64> = basis
        .iter()
        .map(|a| a.iter().zip(&r.weights).map(|(e, w)| i64::from(*e) * w).sum())
        .collect();

    let sigma_cols = basis
        .iter()
        .map(|alpha| {
            let mut poly: BTreeMap<Vec<u32>, Q> = BTreeMap::new();
            poly.insert(vec![0; d], Q::one());
            for (var, &e) in alpha.iter().enumerate() {
                for _ in 0..e {
                    let mut next = BTreeMap::new();
                    for (mono, c) in &poly {
                        for (row, s) in r.sigma.col(var) {
                            let mut m = mono.clone();
                            m[*row] += 1;
                            let slot = next.entry(m).or_insert_with(Q::zero);
                            *slot += c * s;
                        }
                    }
                    poly = next;
                }
            }
            let mut col = SparseVec::new();
            for (mono, c) in poly {
                add_entry(&mut col, index[mono.as_slice()], c);
            }
            col
        })
        .collect();

    let form_rows: Vec<Vec<(usize, Q)>> = (0..d)
        .map(|i| {
            (0..d)
                .filter_map(|j| {
                    let x = r.form.entry(i, j);
                    (!x.is_zero()).then_some((j, x))
                })
                .collect()
        })
        .collect();
    let mut by_weight: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for (i, w) in weights.iter().enumerate() {
        by_weight.entry(*w).or_default().push(i);
    }
    let k_fact = Q::from_integer(factorial(k));
    let mut form = SparseMatrix::zero(basis.len());
    for (i, alpha) in basis.iter().enumerate() {
        let Some(partners) = by_weight.get(&-weights[i]) else {
            continue;
        };
        for &j in partners {
            let beta = &basis[j];
            let mut caps = beta.clone();
            let rows: Vec<usize> = (0..d).filter(|&r| alpha[r] > 0).collect();
            let sum = table_sum(&rows, 0, alpha, &form_rows, &mut caps);
            if sum.is_zero() {
                continue;
            }
            let beta_fact = beta.iter().fold(BigInt::one(), |acc, b| acc * factorial(*b));
            form.set(i, j, sum * Q::from_integer(beta_fact) / &k_fact);
        }
    }
    NRep {
        weights,
        sigma: SparseMatrix::from_cols(sigma_cols),
        form,
    }
}

/// Sum over contingency tables `N` with row sums `alpha` (over `rows`) and
/// column sums `caps` of `Π_j α_j!/Π_l N_jl! · Π ω_jl^N_jl`.
fn table_sum(
    rows: &[usize],
    ri: usize,
    alpha: &[u32],
    form_rows: &[Vec<(usize, Q)>],
    caps: &mut Vec<u32>,
) -> Q {
    if ri == rows.len() {
        return if caps.iter().all(|c| *c == 0) {
            Q::one()
        } else {
            Q::zero()
        };
    }
    let j = rows[ri];
    let row_fact = Q::from_integer(factorial(alpha[j]));
    row_fact * distribute(rows, ri, &form_rows[j], 0, alpha[j], alpha, form_rows, caps)
}

#[allow(clippy::too_many_arguments)]
fn distribute(
    rows: &[usize],
    ri: usize,
    entries: &[(usize, Q)],
    idx: usize,
    left: u32,
    alpha: &[u32],
    form_rows: &[Vec<(usize, Q)>],
    caps: &mut Vec<u32>,
) -> Q {
    if idx == entries.len() {
        return if left == 0 {
            table_sum(rows, ri + 1, alpha, form_rows, caps)
        } else {
            Q::zero()
        };
    }
    let (col, ref w) = entries[idx];
    let mut acc = Q::zero();
    let mut power = Q::one();
    let max = left.min(caps[col]);
    for n in 0..=max {
        caps[col] -= n;
        let rest = distribute(rows, ri, entries, idx + 1, left - n, alpha, form_rows, caps);
        caps[col] += n;
        if !rest.is_zero() {
            acc += &power / Q::from_integer(factorial(n)) * rest;
        }
        power *= w;
    }
    acc
}
