//! Canonical subspaces of Q^n.
//!
//! A `Subspace` stores its basis in reduced row-echelon form with zero rows
//! dropped, so two subspaces are equal (and hash equal) exactly when they
//! are the same subspace. The empty basis is the zero subspace.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::rat::Rat;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
}

/// Incremental row-echelon accumulator. Rows are kept sorted by pivot column
/// and normalized to leading 1 but are only back-substituted into full RREF
/// when the builder is finished.
#[derive(Debug, Clone)]
pub struct EchelonBuilder {
    ambient: usize,
    rows: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
}

impl EchelonBuilder {
    pub fn new(ambient: usize) -> Self {
        EchelonBuilder { ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn from_subspace(s: &Subspace) -> Self {
        let mut b = EchelonBuilder::new(s.ambient);
        for row in s.basis_rows() {
            b.insert(row.to_vec());
        }
        b
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Forward-reduces `v` against the stored rows in place.
    pub fn reduce(&self, v: &mut [Rat]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let f = v[p].clone();
                for (j, r) in row.iter().enumerate().skip(p) {
                    if !r.is_zero() {
                        v[j] -= r * &f;
                    }
                }
            }
        }
    }

    /// Inserts a vector; returns true when the rank grew.
    pub fn insert(&mut self, v: Vec<Rat>) -> bool {
        self.insert_and_get(v).is_some()
    }

    /// Inserts a vector; on rank growth returns the stored normalized row.
    pub fn insert_and_get(&mut self, mut v: Vec<Rat>) -> Option<Vec<Rat>> {
        assert_eq!(v.len(), self.ambient, "vector/ambient mismatch");
        self.reduce(&mut v);
        let lead = v.iter().position(|x| !x.is_zero())?;
        let inv = v[lead].recip();
        for x in v.iter_mut().skip(lead) {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        let at = self.pivots.partition_point(|&p| p < lead);
        self.pivots.insert(at, lead);
        self.rows.insert(at, v.clone());
        Some(v)
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(Rat::is_zero)
    }

    /// Back-substitutes to full RREF and returns the canonical subspace.
    pub fn into_subspace(mut self) -> Subspace {
        for i in (0..self.rows.len()).rev() {
            let p = self.pivots[i];
            let (head, tail) = self.rows.split_at_mut(i);
            let row = &tail[0];
            for upper in head.iter_mut() {
                if !upper[p].is_zero() {
                    let f = upper[p].clone();
                    for (j, r) in row.iter().enumerate().skip(p) {
                        if !r.is_zero() {
                            upper[j] -= r * &f;
                        }
                    }
                }
            }
        }
        let basis = if self.rows.is_empty() {
            Matrix::zero(0, self.ambient)
        } else {
            Matrix::from_rows(self.rows).expect("echelon rows are rectangular")
        };
        Subspace { ambient: self.ambient, basis }
    }
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::zero(0, ambient) }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::identity(ambient) }
    }

    /// Canonical subspace spanned by the given vectors.
    pub fn span(ambient: usize, rows: impl IntoIterator<Item = Vec<Rat>>) -> Self {
        let mut b = EchelonBuilder::new(ambient);
        for v in rows {
            b.insert(v);
        }
        b.into_subspace()
    }

    /// Row space of a matrix, canonicalized.
    pub fn row_space(m: &Matrix) -> Self {
        Subspace::span(m.cols(), m.row_vecs())
    }

    /// Null space `{v : M v = 0}`, canonicalized.
    pub fn kernel_of(m: &Matrix) -> Self {
        Subspace::span(m.cols(), m.kernel_rows())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_rows(&self) -> impl Iterator<Item = &[Rat]> {
        (0..self.basis.rows()).map(|i| self.basis.row(i))
    }

    /// Pivot columns of the RREF basis.
    pub fn pivot_cols(&self) -> Vec<usize> {
        self.basis_rows()
            .map(|r| r.iter().position(|x| !x.is_zero()).expect("no zero rows in basis"))
            .collect()
    }

    /// Ambient coordinates not covered by a pivot, in increasing order.
    pub fn free_cols(&self) -> Vec<usize> {
        let pivots = self.pivot_cols();
        (0..self.ambient).filter(|c| !pivots.contains(c)).collect()
    }

    /// Residual of `v` after reduction by the basis.
    pub fn reduce_vec(&self, v: &[Rat]) -> Vec<Rat> {
        let mut w = v.to_vec();
        for row in self.basis_rows() {
            let p = row.iter().position(|x| !x.is_zero()).expect("no zero rows");
            if !w[p].is_zero() {
                let f = w[p].clone();
                for (j, r) in row.iter().enumerate().skip(p) {
                    if !r.is_zero() {
                        w[j] -= r * &f;
                    }
                }
            }
        }
        w
    }

    pub fn contains_vec(&self, v: &[Rat]) -> Result<bool> {
        if v.len() != self.ambient {
            return Err(Error::DimMismatch(self.ambient, v.len()));
        }
        Ok(self.reduce_vec(v).iter().all(Rat::is_zero))
    }

    /// Inclusion test `self <= other`.
    pub fn leq(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        for row in self.basis_rows() {
            if !other.contains_vec(row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Canonical sum `self + other`.
    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut b = EchelonBuilder::from_subspace(self);
        for row in other.basis_rows() {
            b.insert(row.to_vec());
        }
        Ok(b.into_subspace())
    }

    /// Annihilator under the standard dot product; `dim + dim^perp = n`.
    pub fn annihilator(&self) -> Subspace {
        if self.is_zero() {
            return Subspace::full(self.ambient);
        }
        Subspace::kernel_of(&self.basis)
    }

    /// Canonical intersection, computed by annihilator duality.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let a = self.annihilator();
        let b = other.annihilator();
        Ok(a.sum(&b)?.annihilator())
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimMismatch(self.ambient, other.ambient));
        }
        Ok(())
    }
}
