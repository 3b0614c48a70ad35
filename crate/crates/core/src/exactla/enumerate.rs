//! Exhaustive enumeration of vectors and subspaces over finite fields.

use num_traits::One;

use super::matrix::Matrix;
use super::subspace::Subspace;
use crate::error::{Error, Result};
use crate::field::Field;

/// Default cap on enumerated objects.
pub const DEFAULT_BUDGET: u128 = 1 << 16;

fn field_elements<F: Field>() -> Result<Vec<F>> {
    F::elements().ok_or_else(|| Error::UnsupportedCharacteristic(F::characteristic()))
}

fn checked_pow(base: u128, exp: usize) -> u128 {
    (0..exp).fold(1u128, |acc, _| acc.saturating_mul(base))
}

/// `|F|^n`, saturating.
pub fn vector_count<F: Field>(n: usize) -> Option<u128> {
    F::order().map(|q| checked_pow(q as u128, n))
}

/// Every vector of `F^n` in lexicographic order (first coordinate slowest).
pub fn all_vectors<F: Field>(n: usize, budget: u128) -> Result<Vec<Vec<F>>> {
    let elems = field_elements::<F>()?;
    let needed = checked_pow(elems.len() as u128, n);
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let mut out = Vec::with_capacity(needed as usize);
    let q = elems.len();
    for mut idx in 0..needed as usize {
        let mut v = vec![elems[0].clone(); n];
        for slot in v.iter_mut().rev() {
            *slot = elems[idx % q].clone();
            idx /= q;
        }
        out.push(v);
    }
    Ok(out)
}

/// One representative per line through the origin: first nonzero coordinate is 1.
pub fn projective_points<F: Field>(n: usize, budget: u128) -> Result<Vec<Vec<F>>> {
    Ok(all_vectors::<F>(n, budget)?
        .into_iter()
        .filter(|v| v.iter().find(|c| !c.is_zero()).is_some_and(One::is_one))
        .collect())
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Free positions of an RREF shape: `(row, col)` with `col` right of the row's
/// pivot and not itself a pivot column.
fn free_positions(n: usize, pivots: &[usize]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (r, &p) in pivots.iter().enumerate() {
        for c in p + 1..n {
            if !pivots.contains(&c) {
                out.push((r, c));
            }
        }
    }
    out
}

/// Number of subspaces of `F_q^n`, saturating.
pub fn subspace_count(n: usize, q: u64) -> u128 {
    (0..=n)
        .flat_map(|k| combinations(n, k))
        .map(|piv| checked_pow(q as u128, free_positions(n, &piv).len()))
        .fold(0u128, |a, b| a.saturating_add(b))
}

/// Every subspace of `F^n`, generated shape by shape in RREF, ordered by dimension.
pub fn all_subspaces<F: Field>(n: usize, budget: u128) -> Result<Vec<Subspace<F>>> {
    let elems = field_elements::<F>()?;
    let q = elems.len();
    let needed = subspace_count(n, q as u64);
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let mut out = Vec::with_capacity(needed as usize);
    for k in 0..=n {
        for piv in combinations(n, k) {
            let free = free_positions(n, &piv);
            let total = q.pow(free.len() as u32);
            for mut idx in 0..total {
                let mut m = Matrix::<F>::zeros(k, n);
                for (r, &p) in piv.iter().enumerate() {
                    m.set(r, p, F::one());
                }
                for &(r, c) in &free {
                    m.set(r, c, elems[idx % q].clone());
                    idx /= q;
                }
                out.push(Subspace::row_space(&m));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rational};
    use std::collections::HashSet;

    #[test]
    fn gaussian_binomial_counts() {
        assert_eq!(subspace_count(2, 2), 5);
        assert_eq!(subspace_count(2, 3), 6);
        assert_eq!(subspace_count(3, 2), 16);
        assert_eq!(subspace_count(3, 3), 28);
    }

    #[test]
    fn enumeration_is_distinct_and_complete() {
        let all = all_subspaces::<Fp<3>>(3, DEFAULT_BUDGET).unwrap();
        assert_eq!(all.len(), 28);
        let set: HashSet<_> = all.iter().cloned().collect();
        assert_eq!(set.len(), 28);
        assert!(set.contains(&Subspace::zero(3)));
        assert!(set.contains(&Subspace::full(3)));
    }

    #[test]
    fn budget_and_field_errors() {
        assert!(matches!(
            all_vectors::<Fp<2>>(20, DEFAULT_BUDGET),
            Err(Error::BudgetExceeded { .. })
        ));
        assert!(matches!(
            all_vectors::<Rational>(1, DEFAULT_BUDGET),
            Err(Error::UnsupportedCharacteristic(0))
        ));
    }

    #[test]
    fn projective_points_count() {
        assert_eq!(
            projective_points::<Fp<3>>(2, DEFAULT_BUDGET).unwrap().len(),
            4
        );
        assert_eq!(
            projective_points::<Fp<2>>(3, DEFAULT_BUDGET).unwrap().len(),
            7
        );
    }
}
