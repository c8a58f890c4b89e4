//! Sparse and dense exact rational linear algebra.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;
pub type SparseVec = BTreeMap<usize, Q>;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub(crate) fn add_entry(v: &mut SparseVec, i: usize, x: Q) {
    if x.is_zero() {
        return;
    }
    let slot = v.entry(i).or_insert_with(Q::zero);
    *slot += x;
    if slot.is_zero() {
        v.remove(&i);
    }
}

pub fn scale_vec(v: &SparseVec, c: &Q) -> SparseVec {
    if c.is_zero() {
        return SparseVec::new();
    }
    v.iter().map(|(i, x)| (*i, x * c)).collect()
}

/// Scales a vector to a primitive integer vector whose first nonzero
/// coordinate is positive.
pub fn primitive(v: &SparseVec) -> SparseVec {
    let mut lcm = BigInt::one();
    for x in v.values() {
        lcm = lcm.lcm(x.denom());
    }
    let mut gcd = BigInt::zero();
    for x in v.values() {
        gcd = gcd.gcd(&(x.numer() * (&lcm / x.denom())));
    }
    if gcd.is_zero() {
        return SparseVec::new();
    }
    let mut factor = Q::new(lcm, gcd);
    if v.values().next().is_some_and(|x| x.is_negative()) {
        factor = -factor;
    }
    scale_vec(v, &factor)
}

/// Square matrix stored by columns: `cols[j]` is the image of basis vector
/// `j`, so `entry(i, j)` is the coefficient of `e_i` in `M e_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    cols: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn zero(n: usize) -> Self {
        Self {
            cols: vec![SparseVec::new(); n],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::diagonal((0..n).map(|_| Q::one()))
    }

    pub fn diagonal<I: IntoIterator<Item = Q>>(diag: I) -> Self {
        let cols = diag
            .into_iter()
            .enumerate()
            .map(|(i, x)| {
                let mut c = SparseVec::new();
                add_entry(&mut c, i, x);
                c
            })
            .collect();
        Self { cols }
    }

    /// From row-major integer entries.
    pub fn from_rows(rows: &[&[i64]]) -> Self {
        let n = rows.len();
        let mut m = Self::zero(n);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n, "matrix must be square");
            for (j, x) in row.iter().enumerate() {
                m.set(i, j, q(*x));
            }
        }
        m
    }

    pub(crate) fn from_cols(cols: Vec<SparseVec>) -> Self {
        Self { cols }
    }

    pub fn dim(&self) -> usize {
        self.cols.len()
    }

    pub fn set(&mut self, i: usize, j: usize, x: Q) {
        self.cols[j].remove(&i);
        add_entry(&mut self.cols[j], i, x);
    }

    pub fn entry(&self, i: usize, j: usize) -> Q {
        self.cols[j].get(&i).cloned().unwrap_or_else(Q::zero)
    }

    pub fn col(&self, j: usize) -> &SparseVec {
        &self.cols[j]
    }

    /// Nonzero entries as `(row, col, value)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Q)> {
        self.cols
            .iter()
            .enumerate()
            .flat_map(|(j, c)| c.iter().map(move |(i, x)| (*i, j, x)))
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (j, x) in v {
            for (i, y) in &self.cols[*j] {
                add_entry(&mut out, *i, x * y);
            }
        }
        out
    }

    pub fn compose(&self, other: &Self) -> Self {
        Self {
            cols: other.cols.iter().map(|c| self.apply(c)).collect(),
        }
    }

    /// `x^T M y`, the bilinear form with Gram matrix `M`.
    pub fn pair(&self, x: &SparseVec, y: &SparseVec) -> Q {
        let my = self.apply(y);
        let mut acc = Q::zero();
        for (i, a) in x {
            if let Some(b) = my.get(i) {
                acc += a * b;
            }
        }
        acc
    }

    /// Kronecker product; index `(i, j)` maps to `i * other.dim() + j`.
    pub fn kron(&self, other: &Self) -> Self {
        let n2 = other.dim();
        let mut cols = Vec::with_capacity(self.dim() * n2);
        for ca in &self.cols {
            for cb in &other.cols {
                let mut c = SparseVec::new();
                for (ia, xa) in ca {
                    for (ib, xb) in cb {
                        add_entry(&mut c, ia * n2 + ib, xa * xb);
                    }
                }
                cols.push(c);
            }
        }
        Self { cols }
    }

    pub fn block_diag(&self, other: &Self) -> Self {
        let off = self.dim();
        let mut cols = self.cols.clone();
        cols.extend(
            other
                .cols
                .iter()
                .map(|c| c.iter().map(|(i, x)| (i + off, x.clone())).collect()),
        );
        Self { cols }
    }

    pub fn to_dense(&self) -> Vec<Vec<Q>> {
        let n = self.dim();
        let mut d = vec![vec![Q::zero(); n]; n];
        for (i, j, x) in self.entries() {
            d[i][j] = x.clone();
        }
        d
    }

    pub fn determinant(&self) -> Q {
        determinant(self.to_dense())
    }
}

pub fn determinant(mut a: Vec<Vec<Q>>) -> Q {
    let n = a.len();
    let mut det = Q::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Q::zero();
        };
        if piv != col {
            a.swap(piv, col);
            det = -det;
        }
        let p = a[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] / &p;
            for c in col..n {
                let sub = &f * &a[col][c];
                a[r][c] -= sub;
            }
        }
    }
    det
}

/// Basis of the kernel of a dense matrix (rows × cols), one vector per free
/// column of the reduced row echelon form.
pub fn nullspace(mut a: Vec<Vec<Q>>, cols: usize) -> Vec<Vec<Q>> {
    let rows = a.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(piv, r);
        let p = a[r][c].clone();
        for x in a[r].iter_mut() {
            *x /= &p;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for k in 0..cols {
                    let sub = &f * &a[r][k];
                    a[i][k] -= sub;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Q::zero(); cols];
        v[free] = Q::one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -a[row][free].clone();
        }
        basis.push(v);
    }
    basis
}
