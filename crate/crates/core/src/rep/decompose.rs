//! Decomposition of an `N`-representation into irreducibles.
//!
//! Weight-`±m` pairs are split into σ-stable planes that are orthogonal for
//! the pairing `B(v, v') = ω(v, σv')` on the weight-`m` space. A plane with
//! weight vector `v` is oriented by the basis `(v, w)` with `ω(v, w) = 1`.
//! Writing `σw = a·v`, the plane is `Õ⁺(m)` when `a > 0` and `Õ⁻(m)` when
//! `a < 0`. Rescaling `v` by `λ` and `w` by `1/λ` multiplies `a` by a square,
//! so only the sign of `a` is an invariant. The weight-0 space splits into
//! σ-eigenlines.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use super::matrix::{nullspace, primitive, q, scale_vec, SparseVec, Q};
use super::{IrrepLabel, NRep, Orientation};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Summand {
    pub label: IrrepLabel,
    /// Ambient coordinates of the summand's basis. For a rank-2 summand this
    /// is `(v, w)` with `v` of positive weight and `ω(v, w) = 1`.
    pub basis: Vec<SparseVec>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub summands: Vec<Summand>,
}

impl Decomposition {
    /// Labels in canonical order, with repetition.
    pub fn labels(&self) -> Vec<IrrepLabel> {
        self.summands.iter().map(|s| s.label).collect()
    }

    pub fn multiplicities(&self) -> BTreeMap<IrrepLabel, usize> {
        let mut out = BTreeMap::new();
        for s in &self.summands {
            *out.entry(s.label).or_insert(0) += 1;
        }
        out
    }

    pub fn rank(&self) -> usize {
        self.summands.iter().map(|s| s.label.rank()).sum()
    }

    pub fn has_line(&self) -> bool {
        self.summands.iter().any(|s| s.label.rank() == 1)
    }
}

fn weight_of(rep: &NRep, v: &SparseVec) -> Result<i64> {
    let mut weights = v.keys().map(|i| rep.weights()[*i]);
    let Some(w) = weights.next() else {
        return Err(Error::Representation("zero vector".into()));
    };
    if weights.any(|x| x != w) {
        return Err(Error::Representation("vector is not a weight vector".into()));
    }
    Ok(w)
}

/// Returns `c` with `u = c·v`, if `u` is a multiple of `v`.
fn ratio(u: &SparseVec, v: &SparseVec) -> Option<Q> {
    let (i, vi) = v.iter().next()?;
    let c = u.get(i).cloned().unwrap_or_else(Q::zero) / vi;
    (scale_vec(v, &c) == *u).then_some(c)
}

/// Classifies the σ-stable plane spanned by two weight vectors of opposite
/// weight. The basis need not be normalised; its orientation is
/// `sign ω(v, w)`, and a pair listed with the negative-weight vector first
/// is reordered to `(w, -v)`, which keeps that orientation.
pub fn classify_plane(rep: &NRep, v: &SparseVec, w: &SparseVec) -> Result<IrrepLabel> {
    let (mut v, mut w) = (v.clone(), w.clone());
    let mut m = weight_of(rep, &v)?;
    if weight_of(rep, &w)? != -m || m == 0 {
        return Err(Error::Representation(
            "plane basis must have weights m and -m with m != 0".into(),
        ));
    }
    if m < 0 {
        let neg_v = scale_vec(&v, &q(-1));
        v = core::mem::replace(&mut w, neg_v);
        m = -m;
    }
    let sigma = rep.sigma();
    let (Some(_), Some(a)) = (ratio(&sigma.apply(&v), &w), ratio(&sigma.apply(&w), &v)) else {
        return Err(Error::Representation("plane is not σ-stable".into()));
    };
    let kappa = rep.form().pair(&v, &w);
    if kappa.is_zero() {
        return Err(Error::Representation("form vanishes on the plane".into()));
    }
    // oriented basis (v, w/κ) has σ(w/κ) = (a/κ)·v
    let orientation = if (a * kappa).is_positive() {
        Orientation::Plus
    } else {
        Orientation::Minus
    };
    Ok(IrrepLabel::TwoDim(m as u32, orientation))
}

/// Classifies a weight-0 σ-eigenline.
pub fn classify_line(rep: &NRep, v: &SparseVec) -> Result<IrrepLabel> {
    if weight_of(rep, v)? != 0 {
        return Err(Error::Representation("line must have weight 0".into()));
    }
    match ratio(&rep.sigma().apply(v), v) {
        Some(c) if c == q(1) => Ok(IrrepLabel::Trivial),
        Some(c) if c == q(-1) => Ok(IrrepLabel::Sign),
        _ => Err(Error::Representation("not a σ-eigenline".into())),
    }
}

fn embed(indices: &[usize], coords: &[Q]) -> SparseVec {
    let mut v = SparseVec::new();
    for (i, x) in indices.iter().zip(coords) {
        if !x.is_zero() {
            v.insert(*i, x.clone());
        }
    }
    v
}

fn split_weight_zero(rep: &NRep, indices: &[usize], out: &mut Vec<Summand>) -> Result<()> {
    let n = indices.len();
    let local: BTreeMap<usize, usize> = indices.iter().enumerate().map(|(k, i)| (*i, k)).collect();
    let mut s = vec![vec![Q::zero(); n]; n];
    for (c, i) in indices.iter().enumerate() {
        for (r, x) in rep.sigma().col(*i) {
            s[local[r]][c] = x.clone();
        }
    }
    let mut found = 0;
    for (eigen, label) in [(1, IrrepLabel::Trivial), (-1, IrrepLabel::Sign)] {
        let mut shifted = s.clone();
        for (k, row) in shifted.iter_mut().enumerate() {
            row[k] -= q(eigen);
        }
        for v in nullspace(shifted, n) {
            found += 1;
            out.push(Summand {
                label,
                basis: vec![primitive(&embed(indices, &v))],
            });
        }
    }
    if found != n {
        return Err(Error::Representation(
            "σ is not diagonalisable on the weight-0 space".into(),
        ));
    }
    Ok(())
}

fn split_weight(rep: &NRep, m: i64, pos: &[usize], out: &mut Vec<Summand>) -> Result<()> {
    let d = pos.len();
    let sigma_cols: Vec<&SparseVec> = pos.iter().map(|i| rep.sigma().col(*i)).collect();
    let unit = |i: usize| -> SparseVec {
        let mut v = SparseVec::new();
        v.insert(i, q(1));
        v
    };
    let mut gram = vec![vec![Q::zero(); d]; d];
    for p in 0..d {
        for qi in 0..d {
            gram[p][qi] = rep.form().pair(&unit(pos[p]), sigma_cols[qi]);
        }
    }
    for p in 0..d {
        for qi in 0..p {
            if gram[p][qi] != gram[qi][p] {
                return Err(Error::Representation(format!(
                    "pairing on weight {m} is not symmetric"
                )));
            }
        }
    }
    let b = |x: &[Q], y: &[Q]| -> Q {
        let mut acc = Q::zero();
        for (p, xp) in x.iter().enumerate() {
            if xp.is_zero() {
                continue;
            }
            for (qi, yq) in y.iter().enumerate() {
                if !yq.is_zero() && !gram[p][qi].is_zero() {
                    acc += xp * yq * &gram[p][qi];
                }
            }
        }
        acc
    };

    // congruence diagonalisation, starting from the standard basis
    let mut pending: Vec<Vec<Q>> = (0..d)
        .map(|k| {
            let mut v = vec![Q::zero(); d];
            v[k] = q(1);
            v
        })
        .collect();
    let mut planes = Vec::new();
    while !pending.is_empty() {
        let idx = match (0..pending.len()).find(|&i| !b(&pending[i], &pending[i]).is_zero()) {
            Some(i) => i,
            None => {
                let mut pair = None;
                'search: for i in 0..pending.len() {
                    for j in i + 1..pending.len() {
                        if !b(&pending[i], &pending[j]).is_zero() {
                            pair = Some((i, j));
                            break 'search;
                        }
                    }
                }
                let Some((i, j)) = pair else {
                    return Err(Error::Representation(format!(
                        "degenerate pairing on weight {m}"
                    )));
                };
                let sum: Vec<Q> = pending[i].iter().zip(&pending[j]).map(|(x, y)| x + y).collect();
                pending[i] = sum;
                i
            }
        };
        let u = pending.remove(idx);
        let c = b(&u, &u);
        for v in pending.iter_mut() {
            let f = b(v, &u) / &c;
            if !f.is_zero() {
                for (x, y) in v.iter_mut().zip(&u) {
                    *x -= &f * y;
                }
            }
        }
        planes.push(u);
    }

    for u in planes {
        let v = primitive(&embed(pos, &u));
        let sv = rep.sigma().apply(&v);
        let c = rep.form().pair(&v, &sv);
        let w = scale_vec(&sv, &(q(1) / &c));
        let label = classify_plane(rep, &v, &w)?;
        out.push(Summand {
            label,
            basis: vec![v, w],
        });
    }
    Ok(())
}

/// Splits `rep` into irreducible summands, in canonical label order.
pub fn decompose(rep: &NRep) -> Result<Decomposition> {
    rep.check_invariants()?;
    let mut by_weight: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for (i, w) in rep.weights().iter().enumerate() {
        by_weight.entry(*w).or_default().push(i);
    }
    let mut summands = Vec::new();
    for (&w, indices) in by_weight.iter().rev() {
        if w < 0 {
            break;
        }
        if w == 0 {
            split_weight_zero(rep, indices, &mut summands)?;
            continue;
        }
        let negatives = by_weight.get(&-w).map_or(0, Vec::len);
        if negatives != indices.len() {
            return Err(Error::Representation(format!(
                "weight {w} has multiplicity {} but weight {} has {negatives}",
                indices.len(),
                -w
            )));
        }
        split_weight(rep, w, indices, &mut summands)?;
    }
    summands.sort_by_key(|s| s.label);
    Ok(Decomposition { summands })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::{make_irrep, sym_power, tensor};
    use Orientation::*;

    fn o(m: u32, or: Orientation) -> NRep {
        make_irrep(IrrepLabel::TwoDim(m, or)).unwrap()
    }

    #[test]
    fn irreducibles_decompose_to_themselves() {
        for m in 1..=12 {
            for or in [Plus, Minus] {
                let l = IrrepLabel::TwoDim(m, or);
                assert_eq!(decompose(&make_irrep(l).unwrap()).unwrap().labels(), vec![l]);
            }
        }
        for l in [IrrepLabel::Trivial, IrrepLabel::Sign] {
            assert_eq!(decompose(&make_irrep(l).unwrap()).unwrap().labels(), vec![l]);
        }
    }

    #[test]
    fn triple_of_o1() {
        let t = tensor(&tensor(&o(1, Plus), &o(1, Plus)), &o(1, Plus));
        let d = decompose(&t).unwrap();
        assert_eq!(
            d.labels(),
            vec![
                IrrepLabel::TwoDim(3, Plus),
                IrrepLabel::TwoDim(1, Plus),
                IrrepLabel::TwoDim(1, Plus),
                IrrepLabel::TwoDim(1, Plus),
            ]
        );
    }

    #[test]
    fn symmetric_square() {
        let d = decompose(&sym_power(&o(1, Plus), 2)).unwrap();
        assert_eq!(d.labels(), vec![IrrepLabel::TwoDim(2, Plus), IrrepLabel::Sign]);
    }

    #[test]
    fn sign_squared_is_trivial() {
        let s = make_irrep(IrrepLabel::Sign).unwrap();
        assert_eq!(decompose(&tensor(&s, &s)).unwrap().labels(), vec![IrrepLabel::Trivial]);
    }

    #[test]
    fn classification_rejects_unstable_planes() {
        let t = tensor(&o(1, Plus), &o(1, Plus));
        // e1⊗f1 (weight 2) with e1⊗f2 (weight 0)
        let mut v = SparseVec::new();
        v.insert(0, q(1));
        let mut w = SparseVec::new();
        w.insert(1, q(1));
        assert!(classify_plane(&t, &v, &w).is_err());
    }
}
