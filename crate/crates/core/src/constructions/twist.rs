use crate::algebra_core::{check_homomorphism, check_multiplicative, HomAlgebra};
use crate::error::{Error, Result};
use crate::exactla::Matrix;
use crate::field::Field;

/// `(V, α∘μ, α)` for an endomorphism `α` of the product of `j`.
pub fn yau_twist<F: Field>(j: &HomAlgebra<F>, alpha: &Matrix<F>) -> Result<HomAlgebra<F>> {
    let n = j.dim();
    if alpha.rows() != n || alpha.cols() != n {
        return Err(Error::DimensionMismatch(format!(
            "twist map is {}x{}, algebra has dimension {n}",
            alpha.rows(),
            alpha.cols()
        )));
    }
    let plain = HomAlgebra::jordan(j.mu().clone())?;
    let hom = check_homomorphism(alpha, &plain, &plain)?;
    if !hom.get("preserves_product").is_some_and(|v| v.holds()) {
        return Err(Error::NotEndomorphism);
    }
    HomAlgebra::new(j.mu().compose_left(alpha), alpha.clone())
}

/// `(V, α⁻¹∘μ)` for a multiplicative algebra with invertible `α`.
pub fn induced_jordan<F: Field>(a: &HomAlgebra<F>) -> Result<HomAlgebra<F>> {
    let inv = a.alpha().inverse()?;
    if !check_multiplicative(a).holds() {
        return Err(Error::NotMultiplicative);
    }
    HomAlgebra::jordan(a.mu().compose_left(&inv))
}

/// Block-diagonal product and twist. The Jordan flag survives only if both
/// summands carry it.
pub fn direct_sum<F: Field>(a: &HomAlgebra<F>, b: &HomAlgebra<F>) -> HomAlgebra<F> {
    let mu = a.mu().direct_sum(b.mu());
    let out = if a.is_jordan_mode() && b.is_jordan_mode() {
        HomAlgebra::jordan(mu)
    } else {
        HomAlgebra::new(mu, a.alpha().block_diag(b.alpha()))
    };
    out.expect("block sums of commutative tensors are commutative")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra_core::{check_hom_jordan, CheckOptions};
    use crate::constructions::fixtures::{
        fixture_example_4_4, matrix_units, special_jordan_from_associative,
    };
    use crate::field::Rational;

    type Q = Rational;

    #[test]
    fn induced_table_of_example() {
        let a = fixture_example_4_4::<Q>();
        let j = induced_jordan(&a).unwrap();
        assert!(j.is_jordan_mode());
        assert_eq!(
            j.mul(&j.basis_vector(0), &j.basis_vector(0)),
            j.basis_vector(0)
        );
        assert_eq!(
            j.mul(&j.basis_vector(1), &j.basis_vector(1)),
            j.basis_vector(1)
        );
        assert!(vec![Q::from_i64(0); 2] == j.mul(&j.basis_vector(0), &j.basis_vector(1)));
        assert_eq!(yau_twist(&j, a.alpha()).unwrap(), a);
    }

    #[test]
    fn identity_twist_is_trivial() {
        let m2 = special_jordan_from_associative(&matrix_units::<Q>(2)).unwrap();
        let t = yau_twist(&m2, &Matrix::identity(4)).unwrap();
        assert_eq!(t.mu(), m2.mu());
        assert!(check_hom_jordan(&t, CheckOptions::default()).holds());
    }

    #[test]
    fn non_endomorphism_is_rejected() {
        let j = induced_jordan(&fixture_example_4_4::<Q>()).unwrap();
        let m = Matrix::from_i64(&[&[1, 0], &[0, 2]]);
        assert_eq!(yau_twist(&j, &m), Err(Error::NotEndomorphism));
    }

    #[test]
    fn singular_twist_has_no_induced_algebra() {
        let a = fixture_example_4_4::<Q>()
            .with_alpha(Matrix::zeros(2, 2))
            .unwrap();
        assert_eq!(induced_jordan(&a), Err(Error::Singular));
    }

    #[test]
    fn direct_sum_with_empty_algebra() {
        let a = fixture_example_4_4::<Q>();
        let z = HomAlgebra::<Q>::zero(0, Matrix::identity(0)).unwrap();
        assert_eq!(direct_sum(&a, &z), a);
    }
}
