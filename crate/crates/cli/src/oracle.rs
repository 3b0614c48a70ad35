//! Brute-force reference verdicts over small finite fields, used by the
//! discrepancy log. These deliberately avoid the library's decision
//! procedures: products are expanded from the structure constants directly.

use homjordan::exactla::enumerate;
use homjordan::structure::{brute_force_hom_ideals, subspace_product};
use homjordan::{Field, HomAlgebra, Matrix, StructureTensor, Subspace};

fn mul<F: Field>(t: &StructureTensor<F>, x: &[F], y: &[F]) -> Vec<F> {
    let n = t.dim();
    let mut out = vec![F::zero(); n];
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            if yj.is_zero() {
                continue;
            }
            let s = xi.clone() * yj.clone();
            for (k, o) in out.iter_mut().enumerate() {
                *o = o.clone() + s.clone() * t.get(i, j, k).clone();
            }
        }
    }
    out
}

fn apply<F: Field>(m: &Matrix<F>, x: &[F]) -> Vec<F> {
    (0..m.rows())
        .map(|r| (0..m.cols()).fold(F::zero(), |s, c| s + m.get(r, c).clone() * x[c].clone()))
        .collect()
}

/// Evaluates the Hom-Jordan identity at every `x ∈ F^n` and every basis
/// vector `y`. `None` if the field is infinite or the space exceeds `budget`.
pub fn hom_jordan_holds<F: Field>(a: &HomAlgebra<F>, budget: u128) -> Option<bool> {
    let n = a.dim();
    let xs = enumerate::all_vectors::<F>(n, budget).ok()?;
    let t = a.mu();
    for x in xs {
        let xx = mul(t, &x, &x);
        let ax = apply(a.alpha(), &x);
        let aax = apply(a.alpha(), &ax);
        let axx = apply(a.alpha(), &xx);
        for l in 0..n {
            let mut y = vec![F::zero(); n];
            y[l] = F::one();
            let lhs = mul(t, &aax, &mul(t, &y, &xx));
            let rhs = mul(t, &mul(t, &ax, &y), &axx);
            if lhs != rhs {
                return Some(false);
            }
        }
    }
    Some(true)
}

/// `α(μ(e_i, e_j)) = μ(α e_i, α e_j)` on basis pairs.
pub fn multiplicative<F: Field>(a: &HomAlgebra<F>) -> bool {
    let n = a.dim();
    let e = |i: usize| {
        let mut v = vec![F::zero(); n];
        v[i] = F::one();
        v
    };
    (0..n).all(|i| {
        (0..n).all(|j| {
            apply(a.alpha(), &mul(a.mu(), &e(i), &e(j)))
                == mul(a.mu(), &apply(a.alpha(), &e(i)), &apply(a.alpha(), &e(j)))
        })
    })
}

/// Simple iff `μ(V,V) = V` and the only Hom-ideals, found by enumerating
/// every subspace, are `0` and `V`.
pub fn simple<F: Field>(a: &HomAlgebra<F>, budget: u128) -> Option<bool> {
    let n = a.dim();
    if n == 0 {
        return Some(false);
    }
    let v = Subspace::full(n);
    let square = subspace_product(a, &v, &v).ok()?;
    let ideals = brute_force_hom_ideals(a, budget).ok()?;
    Some(square.is_full() && ideals.len() == 2)
}
