use super::twist::direct_sum;
use crate::algebra_core::{
    check_homomorphism, check_isomorphism, check_multiplicative, HomAlgebra, StructureTensor,
    VerificationReport,
};
use crate::error::{Error, Result};
use crate::exactla::{vector, Matrix, Subspace};
use crate::field::Field;
use crate::structure::{is_hom_ideal, restrict_algebra, subspace_product};

/// Unit vectors on the non-pivot coordinates of `i`.
pub fn standard_complement<F: Field>(i: &Subspace<F>) -> Vec<Vec<F>> {
    let n = i.ambient_dim();
    i.non_pivots()
        .into_iter()
        .map(|c| vector::unit(n, c))
        .collect()
}

/// The `d×n` matrix sending `v` to the coordinates of `v + I` in the basis
/// `complement + I` of `V/I`.
pub fn coset_coordinates<F: Field>(i: &Subspace<F>, complement: &[Vec<F>]) -> Result<Matrix<F>> {
    let n = i.ambient_dim();
    let k = i.dim();
    if k + complement.len() != n {
        return Err(Error::PreconditionFailed(format!(
            "complement has {} vectors, expected {}",
            complement.len(),
            n - k
        )));
    }
    let mut cols = i.basis_vectors();
    cols.extend(complement.iter().cloned());
    let b = Matrix::from_columns(&cols, n)?;
    let inv = b
        .inverse()
        .map_err(|_| Error::PreconditionFailed("vectors do not span a complement".into()))?;
    Ok(Matrix::from_fn(n - k, n, |r, c| inv.get(k + r, c).clone()))
}

/// `V → V/I` with the standard complement.
pub fn quotient_projection<F: Field>(i: &Subspace<F>) -> Matrix<F> {
    coset_coordinates(i, &standard_complement(i)).expect("standard complement spans")
}

/// `(V/I, μ̄, ᾱ)` with coset representatives spanned by the non-pivot unit vectors.
pub fn quotient_algebra<F: Field>(a: &HomAlgebra<F>, i: &Subspace<F>) -> Result<HomAlgebra<F>> {
    quotient_with_complement(a, i, &standard_complement(i))
}

/// `(V/I, μ̄, ᾱ)` with coset representatives `complement`.
pub fn quotient_with_complement<F: Field>(
    a: &HomAlgebra<F>,
    i: &Subspace<F>,
    complement: &[Vec<F>],
) -> Result<HomAlgebra<F>> {
    if i.ambient_dim() != a.dim() {
        return Err(Error::DimensionMismatch(format!(
            "ideal in F^{}, algebra of dimension {}",
            i.ambient_dim(),
            a.dim()
        )));
    }
    if !is_hom_ideal(a, i) {
        return Err(Error::NotAnIdeal);
    }
    let p = coset_coordinates(i, complement)?;
    let d = complement.len();
    let mut mu = StructureTensor::zero(d);
    for x in 0..d {
        for y in 0..d {
            let img = p.mul_vec(&a.mul(&complement[x], &complement[y]));
            for (z, v) in img.into_iter().enumerate() {
                mu.set(x, y, z, v);
            }
        }
    }
    let cols: Vec<Vec<F>> = complement
        .iter()
        .map(|c| p.mul_vec(&a.apply_alpha(c)))
        .collect();
    let alpha = Matrix::from_columns(&cols, d)?;
    HomAlgebra::new(mu, alpha)
}

/// The identification of the quotient built on `from` with the one built on `to`.
pub fn complement_change<F: Field>(
    i: &Subspace<F>,
    from: &[Vec<F>],
    to: &[Vec<F>],
) -> Result<Matrix<F>> {
    let p = coset_coordinates(i, to)?;
    let cols: Vec<Vec<F>> = from.iter().map(|c| p.mul_vec(c)).collect();
    Matrix::from_columns(&cols, to.len())
}

/// `V ≅ (V/Ker α) ⊕ Ker α` for an idempotent twist map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitResult<F> {
    pub summand_quotient: HomAlgebra<F>,
    pub summand_kernel: HomAlgebra<F>,
    /// `summand_quotient ⊕ summand_kernel`.
    pub target: HomAlgebra<F>,
    /// `v ↦ (v + Ker α, v − α(v))`.
    pub iso: Matrix<F>,
    pub iso_report: VerificationReport<F>,
    /// `Im α` with the restricted product and twist.
    pub image: HomAlgebra<F>,
    /// `x + Ker α ↦ α(x)` from the quotient onto `Im α`.
    pub phi: Matrix<F>,
    pub phi_report: VerificationReport<F>,
}

impl<F: Field> SplitResult<F> {
    pub fn holds(&self) -> bool {
        self.iso_report.holds() && self.phi_report.holds()
    }
}

pub fn split_idempotent_alpha<F: Field>(a: &HomAlgebra<F>) -> Result<SplitResult<F>> {
    let n = a.dim();
    let alpha = a.alpha();
    if &(alpha * alpha) != alpha {
        return Err(Error::PreconditionFailed("α² ≠ α".into()));
    }
    if !check_multiplicative(a).holds() {
        return Err(Error::PreconditionFailed(
            "algebra is not multiplicative".into(),
        ));
    }
    let im = a.image_alpha();
    let v = Subspace::full(n);
    if !im.contains_subspace(&subspace_product(a, &im, &v)?) {
        return Err(Error::PreconditionFailed("μ(Im α, V) ⊄ Im α".into()));
    }
    let ker = a.kernel_alpha();
    let summand_quotient = quotient_algebra(a, &ker)?;
    let summand_kernel = restrict_algebra(a, &ker)?;
    let target = direct_sum(&summand_quotient, &summand_kernel);

    let proj = quotient_projection(&ker);
    let cols: Vec<Vec<F>> = (0..n)
        .map(|j| {
            let e = vector::unit(n, j);
            let mut col = proj.mul_vec(&e);
            let k = vector::sub(&e, &a.apply_alpha(&e));
            col.extend(ker.coordinates(&k).expect("v − α(v) lies in Ker α"));
            col
        })
        .collect();
    let iso = Matrix::from_columns(&cols, n)?;
    let iso_report = check_isomorphism(&iso, a, &target)?;

    let image = restrict_algebra(a, &im)?;
    let reps = standard_complement(&ker);
    let phi_cols: Vec<Vec<F>> = reps
        .iter()
        .map(|x| {
            im.coordinates(&a.apply_alpha(x))
                .expect("α(x) lies in Im α")
        })
        .collect();
    let phi = Matrix::from_columns(&phi_cols, im.dim())?;
    let phi_report = check_isomorphism(&phi, &summand_quotient, &image)?;
    Ok(SplitResult {
        summand_quotient,
        summand_kernel,
        target,
        iso,
        iso_report,
        image,
        phi,
        phi_report,
    })
}

/// `α` projects onto `span{e₁, e₂}` along `e₃`; the three basis vectors are
/// orthogonal idempotents.
pub fn projection_fixture<F: Field>() -> HomAlgebra<F> {
    let one = F::one;
    let mu =
        StructureTensor::from_entries(3, &[(0, 0, 0, one()), (1, 1, 1, one()), (2, 2, 2, one())])
            .expect("valid table");
    HomAlgebra::new(mu, Matrix::from_i64(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 0]]))
        .expect("valid table")
}

/// Checks that `V → V/I` is a homomorphism onto the quotient.
pub fn check_projection<F: Field>(
    a: &HomAlgebra<F>,
    i: &Subspace<F>,
) -> Result<VerificationReport<F>> {
    let q = quotient_algebra(a, i)?;
    check_homomorphism(&quotient_projection(i), a, &q)
}
