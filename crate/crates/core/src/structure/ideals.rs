use crate::algebra_core::{HomAlgebra, StructureTensor};
use crate::error::{Error, Result};
use crate::exactla::enumerate;
use crate::exactla::{Matrix, Subspace};
use crate::field::Field;

/// `span{μ(u, w) : u ∈ U, w ∈ W}`.
pub fn subspace_product<F: Field>(
    a: &HomAlgebra<F>,
    u: &Subspace<F>,
    w: &Subspace<F>,
) -> Result<Subspace<F>> {
    let n = a.dim();
    if u.ambient_dim() != n || w.ambient_dim() != n {
        return Err(Error::DimensionMismatch(format!(
            "subspaces of F^{} and F^{} in an algebra of dimension {n}",
            u.ambient_dim(),
            w.ambient_dim()
        )));
    }
    let us = u.basis_vectors();
    let ws = w.basis_vectors();
    let mut prods = Vec::with_capacity(us.len() * ws.len());
    for x in &us {
        for y in &ws {
            prods.push(a.mul(x, y));
        }
    }
    Subspace::span(n, prods)
}

/// `μ(W, V) ⊆ W`.
pub fn is_jordan_ideal<F: Field>(a: &HomAlgebra<F>, w: &Subspace<F>) -> bool {
    let n = a.dim();
    w.ambient_dim() == n
        && w.basis_vectors()
            .iter()
            .all(|x| (0..n).all(|j| w.contains(&a.mul(x, &a.basis_vector(j)))))
}

/// `α(W) ⊆ W` and `μ(W, V) ⊆ W`.
pub fn is_hom_ideal<F: Field>(a: &HomAlgebra<F>, w: &Subspace<F>) -> bool {
    w.ambient_dim() == a.dim() && w.is_invariant_under(a.alpha()) && is_jordan_ideal(a, w)
}

fn closure<F: Field>(
    a: &HomAlgebra<F>,
    gens: Vec<Vec<F>>,
    with_alpha: bool,
) -> Result<Subspace<F>> {
    let n = a.dim();
    let mut w = Subspace::span(n, gens)?;
    loop {
        let mut vs = w.basis_vectors();
        for x in w.basis_vectors() {
            if with_alpha {
                vs.push(a.apply_alpha(&x));
            }
            for j in 0..n {
                vs.push(a.mul(&x, &a.basis_vector(j)));
            }
        }
        let next = Subspace::span(n, vs)?;
        if next.dim() == w.dim() {
            return Ok(w);
        }
        w = next;
    }
}

/// Smallest Hom-ideal containing `gens`.
pub fn ideal_closure<F: Field>(a: &HomAlgebra<F>, gens: Vec<Vec<F>>) -> Result<Subspace<F>> {
    closure(a, gens, true)
}

/// Smallest ideal of `(V, μ)` containing `gens`, ignoring `α`.
pub fn jordan_ideal_closure<F: Field>(a: &HomAlgebra<F>, gens: Vec<Vec<F>>) -> Result<Subspace<F>> {
    closure(a, gens, false)
}

/// Every Hom-ideal, by enumerating all subspaces. Finite fields only.
pub fn brute_force_hom_ideals<F: Field>(
    a: &HomAlgebra<F>,
    budget: u128,
) -> Result<Vec<Subspace<F>>> {
    Ok(enumerate::all_subspaces::<F>(a.dim(), budget)?
        .into_iter()
        .filter(|w| is_hom_ideal(a, w))
        .collect())
}

/// The algebra obtained by restricting `μ` and `α` to `s`, in the RREF basis of `s`.
pub fn restrict_algebra<F: Field>(a: &HomAlgebra<F>, s: &Subspace<F>) -> Result<HomAlgebra<F>> {
    let basis = s.basis_vectors();
    let mu = a.mu().in_basis(&basis, |v| s.coordinates(v))?;
    let alpha = s.restrict(a.alpha())?;
    let out = HomAlgebra::new(mu, alpha)?;
    Ok(out)
}

/// Restriction of the product alone, for ideals of the induced algebra.
pub fn restrict_product<F: Field>(
    mu: &StructureTensor<F>,
    s: &Subspace<F>,
) -> Result<HomAlgebra<F>> {
    let basis = s.basis_vectors();
    HomAlgebra::jordan(mu.in_basis(&basis, |v| s.coordinates(v))?)
}

/// Embedding matrix of `s` (columns are its RREF basis vectors).
pub fn embedding<F: Field>(s: &Subspace<F>) -> Matrix<F> {
    s.basis().transpose()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::vector;
    use crate::field::{Fp, Rational};

    type Q = Rational;

    fn ex44<F: Field>() -> HomAlgebra<F> {
        let mu =
            StructureTensor::from_entries(2, &[(0, 0, 1, F::one()), (1, 1, 0, F::one())]).unwrap();
        HomAlgebra::new(mu, Matrix::from_i64(&[&[0, 1], &[1, 0]])).unwrap()
    }

    fn ex44_pair() -> HomAlgebra<Q> {
        let a = ex44::<Q>();
        let mu = a.mu().direct_sum(a.mu());
        HomAlgebra::new(mu, a.alpha().block_diag(a.alpha())).unwrap()
    }

    #[test]
    fn products_of_subspaces() {
        let a = ex44::<Q>();
        let v = Subspace::full(2);
        assert_eq!(subspace_product(&a, &v, &v).unwrap(), v);
        let e1 = Subspace::coordinate_span(2, &[0]);
        assert_eq!(
            subspace_product(&a, &e1, &e1).unwrap(),
            Subspace::coordinate_span(2, &[1])
        );
        let z = HomAlgebra::<Q>::zero(3, Matrix::identity(3)).unwrap();
        assert!(subspace_product(&z, &Subspace::full(3), &Subspace::full(3))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn ideal_membership() {
        let a = ex44::<Q>();
        assert!(is_hom_ideal(&a, &Subspace::zero(2)));
        assert!(is_hom_ideal(&a, &Subspace::full(2)));
        assert!(!is_hom_ideal(&a, &Subspace::coordinate_span(2, &[0])));
    }

    #[test]
    fn closures() {
        let a = ex44::<Q>();
        assert!(ideal_closure(&a, vec![]).unwrap().is_zero());
        assert!(ideal_closure(&a, vec![a.basis_vector(0)])
            .unwrap()
            .is_full());
        let b = ex44_pair();
        let c = ideal_closure(&b, vec![b.basis_vector(0)]).unwrap();
        assert_eq!(c, Subspace::coordinate_span(4, &[0, 1]));
        assert!(is_hom_ideal(&b, &c));
    }

    #[test]
    fn brute_force_examples() {
        let z = HomAlgebra::<Fp<2>>::zero(2, Matrix::zeros(2, 2)).unwrap();
        assert_eq!(
            brute_force_hom_ideals(&z, enumerate::DEFAULT_BUDGET)
                .unwrap()
                .len(),
            5
        );
        let a = ex44::<Fp<2>>();
        let ideals = brute_force_hom_ideals(&a, enumerate::DEFAULT_BUDGET).unwrap();
        assert_eq!(ideals, vec![Subspace::zero(2), Subspace::full(2)]);
        let a3 = ex44::<Fp<3>>();
        let ideals = brute_force_hom_ideals(&a3, enumerate::DEFAULT_BUDGET).unwrap();
        assert!(!ideals.contains(&Subspace::coordinate_span(2, &[0])));
    }

    #[test]
    fn restriction_to_summand() {
        let b = ex44_pair();
        let s = Subspace::coordinate_span(4, &[2, 3]);
        assert_eq!(restrict_algebra(&b, &s).unwrap(), ex44::<Q>());
        let bad = Subspace::span(4, vec![vector::from_i64(&[1, 0, 0, 0])]).unwrap();
        assert!(restrict_algebra(&b, &bad).is_err());
    }
}
