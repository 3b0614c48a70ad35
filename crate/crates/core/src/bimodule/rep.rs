use crate::algebra_core::HomAlgebra;
use crate::error::{Error, Result};
use crate::exactla::Matrix;
use crate::field::Field;

fn check_shapes<F: Field>(n: usize, m: usize, maps: &[Matrix<F>], what: &str) -> Result<()> {
    if maps.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "{} action matrices for an algebra of dimension {n}",
            maps.len()
        )));
    }
    for (i, l) in maps.iter().enumerate() {
        if l.rows() != m || l.cols() != m {
            return Err(Error::DimensionMismatch(format!(
                "{what} {i} is {}x{}, module has dimension {m}",
                l.rows(),
                l.cols()
            )));
        }
    }
    Ok(())
}

fn combine<F: Field>(m: usize, maps: &[Matrix<F>], a: &[F]) -> Matrix<F> {
    maps.iter()
        .zip(a)
        .filter(|(_, k)| !k.is_zero())
        .fold(Matrix::zeros(m, m), |acc, (l, k)| &acc + &l.scale(k))
}

/// A bimodule `(W, α_W)` given by its left action. The right action is
/// `w · a = a · w`, so `ρ_r ∘ τ = ρ_l` holds by construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BimoduleRep<F> {
    algebra: HomAlgebra<F>,
    alpha_w: Matrix<F>,
    /// `lambda[a]` is the matrix of `w ↦ e_a · w`.
    lambda: Vec<Matrix<F>>,
}

impl<F: Field> BimoduleRep<F> {
    pub fn new(algebra: HomAlgebra<F>, alpha_w: Matrix<F>, lambda: Vec<Matrix<F>>) -> Result<Self> {
        let m = alpha_w.rows();
        if alpha_w.cols() != m {
            return Err(Error::DimensionMismatch(
                "module twist map is not square".into(),
            ));
        }
        check_shapes(algebra.dim(), m, &lambda, "action matrix")?;
        Ok(BimoduleRep {
            algebra,
            alpha_w,
            lambda,
        })
    }

    pub fn algebra(&self) -> &HomAlgebra<F> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.alpha_w.rows()
    }

    pub fn alpha_w(&self) -> &Matrix<F> {
        &self.alpha_w
    }

    pub fn lambda(&self) -> &[Matrix<F>] {
        &self.lambda
    }

    /// Matrix of `w ↦ a · w` for an algebra element `a`.
    pub fn action(&self, a: &[F]) -> Matrix<F> {
        combine(self.dim(), &self.lambda, a)
    }

    /// `(a ⊕ b)`-action on `W ⊕ W'`.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.algebra != other.algebra {
            return Err(Error::PreconditionFailed(
                "modules over different algebras".into(),
            ));
        }
        let lambda = self
            .lambda
            .iter()
            .zip(&other.lambda)
            .map(|(a, b)| a.block_diag(b))
            .collect();
        Self::new(
            self.algebra.clone(),
            self.alpha_w.block_diag(&other.alpha_w),
            lambda,
        )
    }
}

/// A module over a Jordan algebra, given by `x ↦ a · x = x · a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanModuleRep<F> {
    algebra: HomAlgebra<F>,
    lambda_prime: Vec<Matrix<F>>,
    /// Twist carried along for transport back to a bimodule.
    pub alpha_w: Option<Matrix<F>>,
}

impl<F: Field> JordanModuleRep<F> {
    /// The algebra is taken with its product only.
    pub fn new(algebra: &HomAlgebra<F>, m: usize, lambda_prime: Vec<Matrix<F>>) -> Result<Self> {
        check_shapes(algebra.dim(), m, &lambda_prime, "action matrix")?;
        let algebra = if algebra.is_jordan_mode() {
            algebra.clone()
        } else {
            HomAlgebra::jordan(algebra.mu().clone())?
        };
        Ok(JordanModuleRep {
            algebra,
            lambda_prime,
            alpha_w: None,
        })
    }

    pub fn algebra(&self) -> &HomAlgebra<F> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.lambda_prime.first().map_or_else(
            || self.alpha_w.as_ref().map_or(0, Matrix::rows),
            Matrix::rows,
        )
    }

    pub fn lambda_prime(&self) -> &[Matrix<F>] {
        &self.lambda_prime
    }

    pub fn action(&self, a: &[F]) -> Matrix<F> {
        combine(self.dim(), &self.lambda_prime, a)
    }
}

/// `(V, α)` acting on itself through `μ`.
pub fn regular_bimodule<F: Field>(a: &HomAlgebra<F>) -> BimoduleRep<F> {
    let lambda = (0..a.dim()).map(|i| a.left_mult_operator(i)).collect();
    BimoduleRep::new(a.clone(), a.alpha().clone(), lambda).expect("shapes agree")
}

/// A Jordan algebra acting on itself.
pub fn regular_module<F: Field>(j: &HomAlgebra<F>) -> JordanModuleRep<F> {
    let lambda = (0..j.dim()).map(|i| j.left_mult_operator(i)).collect();
    JordanModuleRep::new(j, j.dim(), lambda).expect("shapes agree")
}

/// Every action zero.
pub fn zero_bimodule<F: Field>(a: &HomAlgebra<F>, alpha_w: Matrix<F>) -> Result<BimoduleRep<F>> {
    let m = alpha_w.rows();
    BimoduleRep::new(a.clone(), alpha_w, vec![Matrix::zeros(m, m); a.dim()])
}

/// One-dimensional `W = span{w₁}` with `α_W = id` and every basis element of
/// the algebra acting by the scalar `s`. With `s = 1` over the
/// `fixture_example_4_4` algebra this is the `ex5_3` module.
pub fn scalar_line_module<F: Field>(a: &HomAlgebra<F>, s: F) -> BimoduleRep<F> {
    let lambda = vec![Matrix::diagonal(&[s]); a.dim()];
    BimoduleRep::new(a.clone(), Matrix::identity(1), lambda).expect("shapes agree")
}

/// Over the `fixture_example_4_4` algebra: `W = span{w₁, w₂}`, `α_W` projects onto `w₁`,
/// both basis elements act by `diag(½, 0)`. Needs characteristic other than 2.
pub fn rank_one_fixture<F: Field>(a: &HomAlgebra<F>) -> Result<BimoduleRep<F>> {
    let half = F::from_i64(2).inverse().ok_or(Error::CharacteristicTwo)?;
    let act = Matrix::diagonal(&[half, F::zero()]);
    BimoduleRep::new(
        a.clone(),
        Matrix::diagonal(&[F::one(), F::zero()]),
        vec![act; a.dim()],
    )
}
