//! Free functions on coordinate vectors (`Vec<F>` / `&[F]`).

use num_traits::Zero;

use crate::field::Field;

pub fn zeros<F: Field>(n: usize) -> Vec<F> {
    vec![F::zero(); n]
}

pub fn unit<F: Field>(n: usize, i: usize) -> Vec<F> {
    let mut v = zeros(n);
    v[i] = F::one();
    v
}

pub fn is_zero<F: Field>(v: &[F]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn dot<F: Field>(a: &[F], b: &[F]) -> F {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = F::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc = acc + x.clone() * y.clone();
        }
    }
    acc
}

pub fn add<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| x.clone() + y.clone())
        .collect()
}

pub fn sub<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| x.clone() - y.clone())
        .collect()
}

pub fn scale<F: Field>(k: &F, v: &[F]) -> Vec<F> {
    v.iter().map(|x| k.clone() * x.clone()).collect()
}

/// `y += k * x`
pub fn axpy<F: Field>(y: &mut [F], k: &F, x: &[F]) {
    if k.is_zero() {
        return;
    }
    for (yi, xi) in y.iter_mut().zip(x) {
        if !xi.is_zero() {
            *yi = yi.clone() + k.clone() * xi.clone();
        }
    }
}

/// Linear combination `Σ coeffs[i] * vectors[i]`.
pub fn combine<F: Field>(n: usize, coeffs: &[F], vectors: &[Vec<F>]) -> Vec<F> {
    let mut out = zeros(n);
    for (c, v) in coeffs.iter().zip(vectors) {
        axpy(&mut out, c, v);
    }
    out
}

pub fn from_i64<F: Field>(v: &[i64]) -> Vec<F> {
    v.iter().map(|&x| F::from_i64(x)).collect()
}

/// Random vector with entries drawn by [`Field::sample`].
pub fn random<F: Field, R: rand::Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<F> {
    (0..n).map(|_| F::sample(rng)).collect()
}
