use std::fmt;

use super::matrix::Matrix;
use super::vector;
use crate::error::{Error, Result};
use crate::field::Field;

/// A subspace of `F^n`, stored as the nonzero rows of an RREF matrix.
///
/// Because the representation is canonical, `==` is set equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace<F> {
    ambient: usize,
    basis: Matrix<F>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn span(ambient: usize, vectors: Vec<Vec<F>>) -> Result<Self> {
        let m = Matrix::from_rows(vectors, ambient)?;
        Ok(Self::row_space(&m))
    }

    pub fn row_space(m: &Matrix<F>) -> Self {
        let r = m.rref();
        let basis = Matrix::from_fn(r.rank, m.cols(), |i, j| r.matrix.get(i, j).clone());
        Subspace {
            ambient: m.cols(),
            basis,
            pivots: r.pivots,
        }
    }

    pub fn coordinate_span(ambient: usize, indices: &[usize]) -> Self {
        let vs = indices.iter().map(|&i| vector::unit(ambient, i)).collect();
        Self::span(ambient, vs).expect("unit vectors have ambient length")
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

    /// RREF basis matrix, one basis vector per row.
    pub fn basis(&self) -> &Matrix<F> {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<F>> {
        self.basis.to_rows()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates not used as pivots; their unit vectors span a complement.
    pub fn non_pivots(&self) -> Vec<usize> {
        (0..self.ambient)
            .filter(|c| !self.pivots.contains(c))
            .collect()
    }

    fn check_ambient(&self, n: usize) -> Result<()> {
        if n != self.ambient {
            return Err(Error::DimensionMismatch(format!(
                "ambient dimension {n} vs {}",
                self.ambient
            )));
        }
        Ok(())
    }

    /// Reduces `v` modulo the subspace. The result is zero iff `v` is a member.
    pub fn reduce(&self, v: &[F]) -> Vec<F> {
        let mut out = v.to_vec();
        for (r, &p) in self.pivots.iter().enumerate() {
            if out[p].is_zero() {
                continue;
            }
            let k = -out[p].clone();
            vector::axpy(&mut out, &k, self.basis.row(r));
        }
        out
    }

    pub fn contains(&self, v: &[F]) -> bool {
        v.len() == self.ambient && vector::is_zero(&self.reduce(v))
    }

    /// Coordinates of `v` in the RREF basis, or `None` if `v` is not a member.
    pub fn coordinates(&self, v: &[F]) -> Option<Vec<F>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn contains_subspace(&self, other: &Self) -> bool {
        other.ambient == self.ambient && (0..other.dim()).all(|i| self.contains(other.basis.row(i)))
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other.ambient)?;
        let mut rows = self.basis_vectors();
        rows.extend(other.basis_vectors());
        Self::span(self.ambient, rows)
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other.ambient)?;
        let (k, l) = (self.dim(), other.dim());
        if k == 0 || l == 0 {
            return Ok(Self::zero(self.ambient));
        }
        // Solve Σ a_i u_i - Σ b_j w_j = 0.
        let m = Matrix::from_fn(self.ambient, k + l, |r, c| {
            if c < k {
                self.basis.get(c, r).clone()
            } else {
                -other.basis.get(c - k, r).clone()
            }
        });
        let us = self.basis_vectors();
        let vs = m
            .kernel()
            .basis_vectors()
            .into_iter()
            .map(|sol| vector::combine(self.ambient, &sol[..k], &us))
            .collect();
        Self::span(self.ambient, vs)
    }

    /// Image `{m v : v ∈ self}`.
    pub fn image_under(&self, m: &Matrix<F>) -> Result<Self> {
        self.check_ambient(m.cols())?;
        let vs = self.basis_vectors().iter().map(|v| m.mul_vec(v)).collect();
        Self::span(m.rows(), vs)
    }

    pub fn is_invariant_under(&self, m: &Matrix<F>) -> bool {
        m.cols() == self.ambient
            && m.rows() == self.ambient
            && (0..self.dim()).all(|i| self.contains(&m.mul_vec(self.basis.row(i))))
    }

    /// Matrix of `m` restricted to this (invariant) subspace in the RREF basis,
    /// column convention.
    pub fn restrict(&self, m: &Matrix<F>) -> Result<Matrix<F>> {
        let d = self.dim();
        let mut cols = Vec::with_capacity(d);
        for i in 0..d {
            let img = m.mul_vec(self.basis.row(i));
            cols.push(
                self.coordinates(&img)
                    .ok_or_else(|| Error::PreconditionFailed("subspace is not invariant".into()))?,
            );
        }
        Matrix::from_columns(&cols, d)
    }
}

impl<F: fmt::Debug> fmt::Debug for Subspace<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span{:?} in F^{}", self.basis, self.ambient)
    }
}
