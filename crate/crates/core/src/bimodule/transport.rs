use super::check::check_equivariance;
use super::rep::{BimoduleRep, JordanModuleRep};
use crate::algebra_core::HomAlgebra;
use crate::constructions::{induced_jordan, yau_twist};
use crate::error::{Error, Result};
use crate::exactla::Matrix;
use crate::field::Field;

/// `w ·' a = α_W⁻¹(w · a)` over the induced Jordan algebra.
pub fn bimodule_to_module<F: Field>(r: &BimoduleRep<F>) -> Result<JordanModuleRep<F>> {
    let inv = r.alpha_w().inverse()?;
    if !check_equivariance(r).holds() {
        return Err(Error::EquivarianceFailed);
    }
    let induced = induced_jordan(r.algebra())?;
    let lambda = r.lambda().iter().map(|l| &inv * l).collect();
    let mut out = JordanModuleRep::new(&induced, r.dim(), lambda)?;
    out.alpha_w = Some(r.alpha_w().clone());
    Ok(out)
}

/// `ρ_l(a ⊗ w) = α_W(a ·' w)` over the twist of the module's algebra by `alpha`.
pub fn module_to_bimodule<F: Field>(
    r: &JordanModuleRep<F>,
    alpha: &Matrix<F>,
    alpha_w: &Matrix<F>,
) -> Result<BimoduleRep<F>> {
    let m = r.dim();
    if alpha_w.rows() != m || alpha_w.cols() != m {
        return Err(Error::DimensionMismatch(format!(
            "module twist is {}x{}, module has dimension {m}",
            alpha_w.rows(),
            alpha_w.cols()
        )));
    }
    let algebra = yau_twist(r.algebra(), alpha)?;
    let twisted = module_equivariance(r, alpha, alpha_w);
    if !twisted {
        return Err(Error::EquivarianceFailed);
    }
    let lambda = r.lambda_prime().iter().map(|l| alpha_w * l).collect();
    BimoduleRep::new(algebra, alpha_w.clone(), lambda)
}

/// `α_W(w ·' a) = α_W(w) ·' α(a)` for all basis `a`.
fn module_equivariance<F: Field>(
    r: &JordanModuleRep<F>,
    alpha: &Matrix<F>,
    alpha_w: &Matrix<F>,
) -> bool {
    let j: &HomAlgebra<F> = r.algebra();
    (0..j.dim()).all(|i| {
        let img = alpha.mul_vec(&j.basis_vector(i));
        alpha_w * &r.lambda_prime()[i] == &r.action(&img) * alpha_w
    })
}
