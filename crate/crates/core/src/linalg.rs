//! Exact rational linear algebra: rank, nullspace, solve, canonical subspaces.
//!
//! Everything runs over [`Q`] with a deterministic pivoted Gauss-Jordan
//! elimination. Pivot choice is the candidate with the smallest combined
//! numerator/denominator bit length (ties broken by lowest row index), so a
//! given matrix always reduces the same way on every run and every machine.
//! All subspace bases are kept in reduced row-echelon form, which makes them
//! canonical: two subspaces are equal iff their stored bases are equal.

use serde::{Deserialize, Serialize};

use num_traits::{One, Zero};

use crate::error::{AlgebraError, Result};
use crate::rational::{bit_size, q_from_str, q_to_string, Q};

/// Dense exact-rational matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Q>,
}

impl QMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        QMatrix { rows, cols, entries: vec![Q::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, Q::one());
        }
        m
    }

    pub fn new(rows: usize, cols: usize, entries: Vec<Q>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        QMatrix { rows, cols, entries }
    }

    pub fn from_rows(rows: Vec<Vec<Q>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(nrows * ncols);
        for r in rows {
            assert_eq!(r.len(), ncols, "ragged rows");
            entries.extend(r);
        }
        QMatrix { rows: nrows, cols: ncols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Q {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Q) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Q] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, other.cols, "column counts must agree");
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        QMatrix { rows: self.rows + other.rows, cols: self.cols, entries }
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(v.len(), self.cols, "vector length must equal cols");
        (0..self.rows)
            .map(|r| {
                let mut acc = Q::zero();
                for (c, x) in v.iter().enumerate() {
                    if !x.is_zero() {
                        let e = self.at(r, c);
                        if !e.is_zero() {
                            acc += e * x;
                        }
                    }
                }
                acc
            })
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Reduced row-echelon form together with the pivot columns.
    pub fn rref(&self) -> (QMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut next = 0usize;
        for col in 0..m.cols {
            if next == m.rows {
                break;
            }
            // Smallest combined bit length wins; ties go to the lowest row.
            let mut best: Option<(usize, u64)> = None;
            for r in next..m.rows {
                let v = m.at(r, col);
                if !v.is_zero() {
                    let sz = bit_size(v);
                    if best.map_or(true, |(_, b)| sz < b) {
                        best = Some((r, sz));
                    }
                }
            }
            let Some((prow, _)) = best else { continue };
            m.swap_rows(next, prow);
            let inv = m.at(next, col).recip();
            if !inv.is_one() {
                for c in col..m.cols {
                    let v = m.at(next, c);
                    if !v.is_zero() {
                        let nv = v * &inv;
                        m.set(next, c, nv);
                    }
                }
            }
            // The pivot row is zero left of `col`, so its support is enough.
            let support: Vec<(usize, Q)> = (col..m.cols)
                .filter_map(|c| {
                    let v = m.at(next, c);
                    (!v.is_zero()).then(|| (c, v.clone()))
                })
                .collect();
            for r in 0..m.rows {
                if r == next {
                    continue;
                }
                let f = m.at(r, col).clone();
                if f.is_zero() {
                    continue;
                }
                for (c, pv) in &support {
                    let nv = m.at(r, *c) - &f * pv;
                    m.set(r, *c, nv);
                }
            }
            pivots.push(col);
            next += 1;
        }
        (m, pivots)
    }

    /// Rank over the rationals, computed exactly.
    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// RREF-normalized basis of the right kernel `{v : m v = 0}`.
    pub fn nullspace(&self) -> Subspace {
        let (r, pivots) = self.rref();
        let is_pivot = {
            let mut f = vec![false; self.cols];
            for &p in &pivots {
                f[p] = true;
            }
            f
        };
        let mut gens = Vec::new();
        for free in (0..self.cols).filter(|c| !is_pivot[*c]) {
            let mut v = vec![Q::zero(); self.cols];
            v[free] = Q::one();
            for (i, &p) in pivots.iter().enumerate() {
                let e = r.at(i, free);
                if !e.is_zero() {
                    v[p] = -e.clone();
                }
            }
            gens.push(v);
        }
        Subspace::from_spanning(self.cols, gens)
    }

    /// One exact solution of `m x = b`, or `None` if the system is
    /// inconsistent. Free variables are set to zero in RREF order, so the
    /// answer is deterministic.
    pub fn solve(&self, b: &[Q]) -> Option<Vec<Q>> {
        assert_eq!(b.len(), self.rows, "rhs length must equal rows");
        let mut aug = QMatrix::zero(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.at(r, c).clone());
            }
            aug.set(r, self.cols, b[r].clone());
        }
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Q::zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = r.at(i, self.cols).clone();
        }
        Some(x)
    }
}

/// A linear subspace of `Q^ambient_dim` with a canonical (RREF) basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SubspaceRepr", into = "SubspaceRepr")]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vec<Q>>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Vec::new() }
    }

    /// The span of `gens`, reduced to the canonical basis.
    pub fn from_spanning<I>(ambient_dim: usize, gens: I) -> Self
    where
        I: IntoIterator<Item = Vec<Q>>,
    {
        let rows: Vec<Vec<Q>> = gens.into_iter().collect();
        for r in &rows {
            assert_eq!(r.len(), ambient_dim, "generator length must equal ambient_dim");
        }
        if rows.is_empty() {
            return Subspace::zero(ambient_dim);
        }
        let (r, pivots) = QMatrix::from_rows(rows).rref();
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Subspace { ambient_dim, basis }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Q>] {
        &self.basis
    }

    /// Reduces `v` against the RREF basis; membership iff the residue is 0.
    pub fn contains_vector(&self, v: &[Q]) -> bool {
        assert_eq!(v.len(), self.ambient_dim, "vector length must equal ambient_dim");
        let mut v = v.to_vec();
        for row in &self.basis {
            let p = row.iter().position(|e| !e.is_zero()).expect("basis rows are nonzero");
            let f = v[p].clone();
            if f.is_zero() {
                continue;
            }
            for (c, e) in row.iter().enumerate().skip(p) {
                if !e.is_zero() {
                    v[c] = &v[c] - &f * e;
                }
            }
        }
        v.iter().all(Q::is_zero)
    }

    /// Whether `other` is contained in `self`.
    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        if self.ambient_dim != other.ambient_dim {
            return Err(AlgebraError::DimensionMismatch(format!(
                "ambient {} vs {}",
                self.ambient_dim, other.ambient_dim
            )));
        }
        Ok(other.basis.iter().all(|v| self.contains_vector(v)))
    }

    /// Subspace equality (bases are canonical, so this is structural).
    pub fn equals(&self, other: &Subspace) -> Result<bool> {
        if self.ambient_dim != other.ambient_dim {
            return Err(AlgebraError::DimensionMismatch(format!(
                "ambient {} vs {}",
                self.ambient_dim, other.ambient_dim
            )));
        }
        Ok(self == other)
    }

    /// Span of the union.
    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        if self.ambient_dim != other.ambient_dim {
            return Err(AlgebraError::DimensionMismatch(format!(
                "ambient {} vs {}",
                self.ambient_dim, other.ambient_dim
            )));
        }
        Ok(Subspace::from_spanning(
            self.ambient_dim,
            self.basis.iter().chain(other.basis.iter()).cloned(),
        ))
    }
}

#[derive(Serialize, Deserialize)]
struct SubspaceRepr {
    ambient_dim: usize,
    basis: Vec<Vec<String>>,
}

impl From<Subspace> for SubspaceRepr {
    fn from(s: Subspace) -> Self {
        SubspaceRepr {
            ambient_dim: s.ambient_dim,
            basis: s.basis.iter().map(|row| row.iter().map(q_to_string).collect()).collect(),
        }
    }
}

impl TryFrom<SubspaceRepr> for Subspace {
    type Error = AlgebraError;

    fn try_from(r: SubspaceRepr) -> Result<Self> {
        let mut basis = Vec::with_capacity(r.basis.len());
        for row in &r.basis {
            if row.len() != r.ambient_dim {
                return Err(AlgebraError::DimensionMismatch(format!(
                    "basis row length {} vs ambient {}",
                    row.len(),
                    r.ambient_dim
                )));
            }
            basis.push(row.iter().map(|s| q_from_str(s)).collect::<Result<Vec<Q>>>()?);
        }
        // Re-normalize so the stored invariant holds even for foreign input.
        Ok(Subspace::from_spanning(r.ambient_dim, basis))
    }
}
