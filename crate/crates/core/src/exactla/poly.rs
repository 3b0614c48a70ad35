//! Univariate polynomials and similarity invariants via the Smith form of `xI - A`.

use std::fmt;

use num_traits::Zero;

use super::matrix::Matrix;
use crate::field::Field;

/// Polynomial with coefficients stored low degree first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<F> {
    coeffs: Vec<F>,
}

impl<F: Field> Poly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: F) -> Self {
        Self::new(vec![c])
    }

    /// `x - c`
    pub fn linear(c: F) -> Self {
        Self::new(vec![-c, F::one()])
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) => {
                let inv = l.inverse().expect("leading coefficient is nonzero");
                Self::new(
                    self.coeffs
                        .iter()
                        .map(|c| c.clone() * inv.clone())
                        .collect(),
                )
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }

    fn coeff(&self, i: usize) -> F {
        self.coeffs.get(i).cloned().unwrap_or_else(F::zero)
    }

    /// Euclidean division; panics on division by zero.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let inv = d.leading().unwrap().inverse().unwrap();
        let mut r = self.coeffs.clone();
        let mut q = vec![F::zero(); self.coeffs.len().saturating_sub(dd)];
        while r.len() > dd && !r.is_empty() {
            let shift = r.len() - 1 - dd;
            let c = r.last().unwrap().clone() * inv.clone();
            for (i, dc) in d.coeffs.iter().enumerate() {
                r[shift + i] = r[shift + i].clone() - c.clone() * dc.clone();
            }
            q[shift] = c;
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        (Self::new(q), Self::new(r))
    }

    /// Monic gcd.
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn eval(&self, x: &F) -> F {
        self.coeffs
            .iter()
            .rev()
            .fold(F::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// Evaluates at a square matrix.
    pub fn eval_matrix(&self, m: &Matrix<F>) -> Matrix<F> {
        let n = m.rows();
        let mut acc = Matrix::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * m) + &Matrix::identity(n).scale(c);
        }
        acc
    }

    /// Roots in the field, when the field can find them.
    pub fn roots(&self) -> Option<Vec<F>> {
        if self.is_zero() {
            return None;
        }
        F::roots_of(&self.coeffs)
    }

    /// Companion matrix of a monic polynomial (column convention: `x^k ↦ x^{k+1}`).
    pub fn companion(&self) -> Matrix<F> {
        let d = self.degree().unwrap_or(0);
        let p = self.monic();
        Matrix::from_fn(d, d, |i, j| {
            if j + 1 == d {
                -p.coeff(i)
            } else if i == j + 1 {
                F::one()
            } else {
                F::zero()
            }
        })
    }
}

impl<F: fmt::Debug> fmt::Debug for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Poly").field(&self.coeffs).finish()
    }
}

impl<F: Field> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let text = c.to_string();
            let (neg, mag) = match text.strip_prefix('-') {
                Some(m) => (true, m.to_string()),
                None => (false, text),
            };
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
                (true, false) => {}
            }
            first = false;
            let unit = mag == "1";
            match i {
                0 => write!(f, "{mag}")?,
                1 if unit => write!(f, "x")?,
                1 => write!(f, "({mag})x")?,
                _ if unit => write!(f, "x^{i}")?,
                _ => write!(f, "({mag})x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Invariant factors of a square matrix; equal iff the matrices are similar.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimilarityInvariant<F> {
    pub invariant_factors: Vec<Poly<F>>,
}

impl<F: fmt::Debug> fmt::Debug for SimilarityInvariant<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.invariant_factors).finish()
    }
}

impl<F: Field> SimilarityInvariant<F> {
    pub fn of(m: &Matrix<F>) -> Self {
        assert!(m.is_square(), "similarity invariant needs a square matrix");
        let n = m.rows();
        let mut a: Vec<Vec<Poly<F>>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let c = -m.get(i, j).clone();
                        if i == j {
                            Poly::new(vec![c, F::one()])
                        } else {
                            Poly::constant(c)
                        }
                    })
                    .collect()
            })
            .collect();
        let mut diag = diagonalize(&mut a);
        normalize_divisibility(&mut diag);
        let invariant_factors = diag
            .into_iter()
            .filter(|p| p.degree().is_some_and(|d| d > 0))
            .collect();
        SimilarityInvariant { invariant_factors }
    }

    pub fn characteristic_polynomial(&self) -> Poly<F> {
        self.invariant_factors
            .iter()
            .fold(Poly::constant(F::one()), |acc, p| acc.mul(p))
    }

    pub fn minimal_polynomial(&self) -> Poly<F> {
        self.invariant_factors
            .last()
            .cloned()
            .unwrap_or_else(|| Poly::constant(F::one()))
    }

    pub fn rational_canonical_form(&self) -> Matrix<F> {
        self.invariant_factors
            .iter()
            .fold(Matrix::zeros(0, 0), |acc, p| acc.block_diag(&p.companion()))
    }
}

/// Reduces a polynomial matrix to diagonal form by unimodular row and column
/// operations, returning the diagonal.
#[allow(clippy::needless_range_loop)]
fn diagonalize<F: Field>(a: &mut [Vec<Poly<F>>]) -> Vec<Poly<F>> {
    let n = a.len();
    let mut out = Vec::with_capacity(n);
    for t in 0..n {
        loop {
            let best = (t..n)
                .flat_map(|i| (t..n).map(move |j| (i, j)))
                .filter(|&(i, j)| !a[i][j].is_zero())
                .min_by_key(|&(i, j)| a[i][j].degree());
            let Some((bi, bj)) = best else {
                break;
            };
            a.swap(t, bi);
            for row in a.iter_mut() {
                row.swap(t, bj);
            }
            let mut clean = true;
            for i in t + 1..n {
                if a[i][t].is_zero() {
                    continue;
                }
                let (q, r) = a[i][t].div_rem(&a[t][t]);
                for j in t..n {
                    let v = a[i][j].sub(&q.mul(&a[t][j]));
                    a[i][j] = v;
                }
                if !r.is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..n {
                if a[t][j].is_zero() {
                    continue;
                }
                let (q, r) = a[t][j].div_rem(&a[t][t]);
                for row in a.iter_mut().skip(t) {
                    let v = row[j].sub(&q.mul(&row[t]));
                    row[j] = v;
                }
                if !r.is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        out.push(a[t][t].monic());
    }
    out
}

/// Turns a diagonal into the divisibility chain `d_1 | d_2 | ...` using
/// `diag(a, b) ~ diag(gcd, lcm)`.
fn normalize_divisibility<F: Field>(d: &mut [Poly<F>]) {
    let n = d.len();
    for i in 0..n {
        for j in i + 1..n {
            if d[i].is_zero() {
                d.swap(i, j);
                continue;
            }
            if d[j].is_zero() {
                continue;
            }
            let g = d[i].gcd(&d[j]);
            let l = d[i].mul(&d[j]).div_rem(&g).0.monic();
            d[i] = g;
            d[j] = l;
        }
    }
}
