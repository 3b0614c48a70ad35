use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactla::{vector, Matrix};
use crate::field::Field;

/// Structure constants `c[i][j][k]` with `e_i · e_j = Σ_k c[i][j][k] e_k`.
///
/// Symmetry is not enforced here so that associative (non-commutative)
/// inputs can be represented; [`HomAlgebra`](super::HomAlgebra) requires it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StructureTensor<F> {
    dim: usize,
    c: Vec<F>,
}

impl<F: Field> StructureTensor<F> {
    pub fn zero(dim: usize) -> Self {
        StructureTensor {
            dim,
            c: vec![F::zero(); dim * dim * dim],
        }
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize, usize) -> F) -> Self {
        let mut c = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    c.push(f(i, j, k));
                }
            }
        }
        StructureTensor { dim, c }
    }

    /// Sparse constructor. Each `(i, j, k, c)` also sets `(j, i, k)`; an explicit
    /// duplicate index, or a mirrored entry with a different value, is rejected.
    pub fn from_entries(dim: usize, entries: &[(usize, usize, usize, F)]) -> Result<Self> {
        let mut seen: BTreeMap<(usize, usize, usize), F> = BTreeMap::new();
        for (i, j, k, v) in entries {
            let (i, j, k) = (*i, *j, *k);
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::Parse(format!(
                    "entry ({i}, {j}, {k}) out of range for dimension {dim}"
                )));
            }
            if seen.insert((i, j, k), v.clone()).is_some() {
                return Err(Error::Parse(format!("duplicate entry ({i}, {j}, {k})")));
            }
        }
        let mut t = Self::zero(dim);
        for (&(i, j, k), v) in &seen {
            if let Some(w) = seen.get(&(j, i, k)) {
                if w != v {
                    return Err(Error::Parse(format!(
                        "conflicting entries ({i}, {j}, {k}) = {v} and ({j}, {i}, {k}) = {w}"
                    )));
                }
            }
            t.set(i, j, k, v.clone());
            t.set(j, i, k, v.clone());
        }
        Ok(t)
    }

    /// Sparse constructor without symmetrization, for associative tables.
    pub fn from_entries_raw(dim: usize, entries: &[(usize, usize, usize, F)]) -> Result<Self> {
        let mut t = Self::zero(dim);
        for (i, j, k, v) in entries {
            if *i >= dim || *j >= dim || *k >= dim {
                return Err(Error::Parse(format!(
                    "entry ({i}, {j}, {k}) out of range for dimension {dim}"
                )));
            }
            t.set(*i, *j, *k, v.clone());
        }
        Ok(t)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dim + j) * self.dim + k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &F {
        &self.c[self.idx(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: F) {
        let idx = self.idx(i, j, k);
        self.c[idx] = v;
    }

    /// Coordinates of `e_i · e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> Vec<F> {
        let s = self.idx(i, j, 0);
        self.c[s..s + self.dim].to_vec()
    }

    /// First `(i, j)` with `c[i][j][·] != c[j][i][·]`.
    pub fn asymmetry(&self) -> Option<(usize, usize)> {
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                if (0..self.dim).any(|k| self.get(i, j, k) != self.get(j, i, k)) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn is_symmetric(&self) -> bool {
        self.asymmetry().is_none()
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    /// Bilinear product of coordinate vectors.
    pub fn apply(&self, x: &[F], y: &[F]) -> Vec<F> {
        let n = self.dim;
        assert!(
            x.len() == n && y.len() == n,
            "vector length must equal dimension"
        );
        let mut out = vector::zeros(n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let w = xi.clone() * yj.clone();
                let s = self.idx(i, j, 0);
                vector::axpy(&mut out, &w, &self.c[s..s + n]);
            }
        }
        out
    }

    /// Tensor of `m ∘ μ` for an `n×n` matrix `m`.
    pub fn compose_left(&self, m: &Matrix<F>) -> Self {
        let n = self.dim;
        assert!(m.rows() == n && m.cols() == n);
        let mut out = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                let img = m.mul_vec(&self.basis_product(i, j));
                let s = out.idx(i, j, 0);
                out.c[s..s + n].clone_from_slice(&img);
            }
        }
        out
    }

    /// Structure constants in a new basis `b_0..b_{d-1}` (columns of `basis`),
    /// assuming the span is closed under the product. `coords` maps an ambient
    /// vector to its coordinates in the new basis.
    pub fn in_basis(
        &self,
        basis: &[Vec<F>],
        mut coords: impl FnMut(&[F]) -> Option<Vec<F>>,
    ) -> Result<Self> {
        let d = basis.len();
        let mut out = Self::zero(d);
        for a in 0..d {
            for b in 0..d {
                let p = self.apply(&basis[a], &basis[b]);
                let c = coords(&p).ok_or_else(|| {
                    Error::PreconditionFailed("span is not closed under the product".into())
                })?;
                for (k, v) in c.into_iter().enumerate() {
                    out.set(a, b, k, v);
                }
            }
        }
        Ok(out)
    }

    /// Nonzero entries in `(i, j, k)` order with `i <= j` when symmetric.
    pub fn sparse_entries(&self) -> Vec<(usize, usize, usize, F)> {
        let sym = self.is_symmetric();
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                if sym && j < i {
                    continue;
                }
                for k in 0..self.dim {
                    let v = self.get(i, j, k);
                    if !v.is_zero() {
                        out.push((i, j, k, v.clone()));
                    }
                }
            }
        }
        out
    }

    /// Block-diagonal tensor: products between the two blocks vanish.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let (n, m) = (self.dim, other.dim);
        Self::from_fn(n + m, |i, j, k| match (i < n, j < n, k < n) {
            (true, true, true) => self.get(i, j, k).clone(),
            (false, false, false) => other.get(i - n, j - n, k - n).clone(),
            _ => F::zero(),
        })
    }
}
