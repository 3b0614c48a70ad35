use super::tensor::StructureTensor;
use crate::error::{Error, Result};
use crate::exactla::{vector, Matrix, Subspace};
use crate::field::{Field, FieldDescriptor};

/// A triple `(V, μ, α)` with commutative `μ` and linear `α`.
///
/// `alpha` uses the column convention `α(e_j) = Σ_i alpha[i][j] e_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomAlgebra<F> {
    mu: StructureTensor<F>,
    alpha: Matrix<F>,
    jordan_mode: bool,
}

impl<F: Field> HomAlgebra<F> {
    pub fn new(mu: StructureTensor<F>, alpha: Matrix<F>) -> Result<Self> {
        let n = mu.dim();
        if alpha.rows() != n || alpha.cols() != n {
            return Err(Error::DimensionMismatch(format!(
                "twist map is {}x{}, algebra has dimension {n}",
                alpha.rows(),
                alpha.cols()
            )));
        }
        if let Some((i, j)) = mu.asymmetry() {
            return Err(Error::NotCommutative { i, j });
        }
        Ok(HomAlgebra {
            mu,
            alpha,
            jordan_mode: false,
        })
    }

    /// A plain commutative algebra, represented with `α = id`.
    pub fn jordan(mu: StructureTensor<F>) -> Result<Self> {
        let n = mu.dim();
        let mut a = Self::new(mu, Matrix::identity(n))?;
        a.jordan_mode = true;
        Ok(a)
    }

    pub fn zero(n: usize, alpha: Matrix<F>) -> Result<Self> {
        Self::new(StructureTensor::zero(n), alpha)
    }

    pub fn field() -> FieldDescriptor {
        F::descriptor()
    }

    pub fn dim(&self) -> usize {
        self.mu.dim()
    }

    pub fn mu(&self) -> &StructureTensor<F> {
        &self.mu
    }

    pub fn alpha(&self) -> &Matrix<F> {
        &self.alpha
    }

    pub fn is_jordan_mode(&self) -> bool {
        self.jordan_mode
    }

    /// Same tensor with a different twist map; drops the Jordan flag.
    pub fn with_alpha(&self, alpha: Matrix<F>) -> Result<Self> {
        Self::new(self.mu.clone(), alpha)
    }

    pub fn multiply(&self, x: &[F], y: &[F]) -> Result<Vec<F>> {
        let n = self.dim();
        if x.len() != n || y.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "vectors of length {} and {} in dimension {n}",
                x.len(),
                y.len()
            )));
        }
        Ok(self.mul(x, y))
    }

    /// Unchecked product; panics on length mismatch.
    pub fn mul(&self, x: &[F], y: &[F]) -> Vec<F> {
        self.mu.apply(x, y)
    }

    pub fn apply_alpha(&self, x: &[F]) -> Vec<F> {
        self.alpha.mul_vec(x)
    }

    pub fn basis_vector(&self, i: usize) -> Vec<F> {
        vector::unit(self.dim(), i)
    }

    /// Matrix of `x ↦ e_i · x`.
    pub fn left_mult_operator(&self, i: usize) -> Matrix<F> {
        let n = self.dim();
        assert!(i < n, "basis index out of range");
        Matrix::from_fn(n, n, |r, c| self.mu.get(i, c, r).clone())
    }

    /// Matrix of `y ↦ x · y`.
    pub fn left_mult_by(&self, x: &[F]) -> Matrix<F> {
        let n = self.dim();
        let cols: Vec<Vec<F>> = (0..n).map(|c| self.mul(x, &vector::unit(n, c))).collect();
        Matrix::from_columns(&cols, n).expect("products have ambient length")
    }

    pub fn kernel_alpha(&self) -> Subspace<F> {
        self.alpha.kernel()
    }

    pub fn image_alpha(&self) -> Subspace<F> {
        self.alpha.image()
    }

    pub fn alpha_invertible(&self) -> bool {
        self.alpha.is_invertible()
    }

    /// The tensor of `α⁻¹ ∘ μ`.
    pub fn induced_tensor(&self) -> Result<StructureTensor<F>> {
        let inv = self.alpha.inverse().map_err(|_| Error::NotJordanType)?;
        Ok(self.mu.compose_left(&inv))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    type Q = Rational;

    fn ex44() -> HomAlgebra<Q> {
        let mu = StructureTensor::from_entries(
            2,
            &[(0, 0, 1, Q::from_i64(1)), (1, 1, 0, Q::from_i64(1))],
        )
        .unwrap();
        HomAlgebra::new(mu, Matrix::from_i64(&[&[0, 1], &[1, 0]])).unwrap()
    }

    #[test]
    fn rejects_asymmetric_tensor() {
        let mu = StructureTensor::from_entries_raw(2, &[(0, 1, 0, Q::from_i64(1))]).unwrap();
        assert_eq!(
            HomAlgebra::new(mu, Matrix::identity(2)),
            Err(Error::NotCommutative { i: 0, j: 1 })
        );
    }

    #[test]
    fn products_in_example_table() {
        let a = ex44();
        let e1 = a.basis_vector(0);
        assert_eq!(a.multiply(&e1, &e1).unwrap(), a.basis_vector(1));
        let s: Vec<Q> = vector::from_i64(&[1, 1]);
        assert_eq!(a.multiply(&s, &s).unwrap(), s);
        assert!(a.multiply(&e1, &[Q::from_i64(1)]).is_err());
    }

    #[test]
    fn left_multiplication_operator() {
        let a = ex44();
        assert_eq!(
            a.left_mult_operator(0),
            Matrix::from_i64(&[&[0, 0], &[1, 0]])
        );
        let induced = HomAlgebra::jordan(a.induced_tensor().unwrap()).unwrap();
        assert_eq!(
            induced.left_mult_operator(0),
            Matrix::from_i64(&[&[1, 0], &[0, 0]])
        );
        let z = HomAlgebra::<Q>::zero(2, Matrix::identity(2)).unwrap();
        assert!(z.left_mult_operator(1).is_zero());
    }
}
