#![allow(dead_code)]

use homjordan::{Field, HomAlgebra, Matrix, StructureTensor};

/// Plain triple-loop product, independent of the library's evaluation code.
#[allow(clippy::needless_range_loop)]
pub fn naive_mul<F: Field>(t: &StructureTensor<F>, x: &[F], y: &[F]) -> Vec<F> {
    let n = t.dim();
    (0..n)
        .map(|k| {
            let mut s = F::zero();
            for i in 0..n {
                for j in 0..n {
                    s = s + x[i].clone() * y[j].clone() * t.get(i, j, k).clone();
                }
            }
            s
        })
        .collect()
}

pub fn naive_apply<F: Field>(m: &Matrix<F>, x: &[F]) -> Vec<F> {
    (0..m.rows())
        .map(|r| (0..m.cols()).fold(F::zero(), |s, c| s + m.get(r, c).clone() * x[c].clone()))
        .collect()
}

/// Every vector of `F^n` for a prime field, by counting in base `p`.
pub fn all_vectors<F: Field>(n: usize) -> Vec<Vec<F>> {
    let p = F::characteristic() as i64;
    let total = p.pow(n as u32);
    (0..total)
        .map(|mut c| {
            let mut v = vec![F::zero(); n];
            for slot in v.iter_mut().rev() {
                *slot = F::from_i64(c % p);
                c /= p;
            }
            v
        })
        .collect()
}

/// Hom-Jordan defect at `(x, y)` evaluated straight from the definition.
pub fn hom_jordan_sides<F: Field>(a: &HomAlgebra<F>, x: &[F], y: &[F]) -> (Vec<F>, Vec<F>) {
    let t = a.mu();
    let al = |v: &[F]| naive_apply(a.alpha(), v);
    let xx = naive_mul(t, x, x);
    let lhs = naive_mul(t, &al(&al(x)), &naive_mul(t, y, &xx));
    let rhs = naive_mul(t, &naive_mul(t, &al(x), y), &al(&xx));
    (lhs, rhs)
}

/// `((x∘x)∘y)∘x` and `(x∘x)∘(y∘x)`.
pub fn jordan_sides<F: Field>(a: &HomAlgebra<F>, x: &[F], y: &[F]) -> (Vec<F>, Vec<F>) {
    let t = a.mu();
    let xx = naive_mul(t, x, x);
    (
        naive_mul(t, &naive_mul(t, &xx, y), x),
        naive_mul(t, &xx, &naive_mul(t, y, x)),
    )
}

/// Whether the identity holds at every `x` and every basis `y` (the defect is
/// linear in `y`).
pub fn oracle_holds<F: Field>(
    a: &HomAlgebra<F>,
    sides: impl Fn(&HomAlgebra<F>, &[F], &[F]) -> (Vec<F>, Vec<F>),
) -> bool {
    let n = a.dim();
    all_vectors::<F>(n).iter().all(|x| {
        (0..n).all(|l| {
            let mut y = vec![F::zero(); n];
            y[l] = F::one();
            let (p, q) = sides(a, x, &y);
            p == q
        })
    })
}

/// Every subspace of `F^n`, as the row space of every matrix with at most `n`
/// rows, deduplicated. Tiny `n` and `p` only.
pub fn all_subspaces_naive<F: Field>(n: usize) -> Vec<homjordan::Subspace<F>> {
    let vs = all_vectors::<F>(n);
    let mut out: Vec<homjordan::Subspace<F>> = vec![homjordan::Subspace::zero(n)];
    let mut frontier = out.clone();
    for _ in 0..n {
        let mut next = Vec::new();
        for s in &frontier {
            for v in &vs {
                if s.contains(v) {
                    continue;
                }
                let mut rows = s.basis_vectors();
                rows.push(v.clone());
                let t = homjordan::Subspace::span(n, rows).unwrap();
                if !out.contains(&t) && !next.contains(&t) {
                    next.push(t);
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Hom-ideal test straight from the definition on basis vectors.
pub fn naive_is_hom_ideal<F: Field>(a: &HomAlgebra<F>, w: &homjordan::Subspace<F>) -> bool {
    let n = a.dim();
    w.basis_vectors().iter().all(|x| {
        w.contains(&naive_apply(a.alpha(), x))
            && (0..n).all(|j| {
                let mut e = vec![F::zero(); n];
                e[j] = F::one();
                w.contains(&naive_mul(a.mu(), x, &e))
            })
    })
}

/// Simple in the sense of the definition: nonzero square equal to `V` and
/// exactly two Hom-ideals.
pub fn naive_is_simple<F: Field>(a: &HomAlgebra<F>) -> bool {
    let n = a.dim();
    if n == 0 {
        return false;
    }
    let vs = all_vectors::<F>(n);
    let mut prods = Vec::new();
    for x in &vs {
        for y in &vs {
            prods.push(naive_mul(a.mu(), x, y));
        }
    }
    let square = homjordan::Subspace::span(n, prods).unwrap();
    if !square.is_full() {
        return false;
    }
    all_subspaces_naive::<F>(n)
        .iter()
        .filter(|w| naive_is_hom_ideal(a, w))
        .count()
        == 2
}

/// A random commutative tensor and twist with mostly zero entries.
pub fn sparse_algebra<F: Field>(n: usize, mu: &[u8], alpha: &[u8], density: u8) -> HomAlgebra<F> {
    let val = |b: u8| {
        if b % 100 < density {
            F::from_i64(b as i64 / 100 + 1)
        } else {
            F::zero()
        }
    };
    let mut t = StructureTensor::zero(n);
    let mut idx = 0;
    for i in 0..n {
        for j in i..n {
            for k in 0..n {
                let v = val(mu[idx % mu.len()]);
                idx += 1;
                t.set(i, j, k, v.clone());
                t.set(j, i, k, v);
            }
        }
    }
    let m = Matrix::from_fn(n, n, |r, c| {
        let b = alpha[(r * n + c) % alpha.len()];
        if b.is_multiple_of(3) {
            if r == c {
                F::one()
            } else {
                F::zero()
            }
        } else {
            F::from_i64(b as i64)
        }
    });
    HomAlgebra::new(t, m).unwrap()
}
