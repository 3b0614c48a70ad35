use super::ideals::subspace_product;
use crate::algebra_core::{check_homomorphism, HomAlgebra};
use crate::error::{Error, Result};
use crate::exactla::{Matrix, Subspace};
use crate::field::Field;

/// `V ⊇ V^(1) ⊇ ...`, stored up to the first term that is zero or repeats.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedSeries<F> {
    pub terms: Vec<Subspace<F>>,
}

impl<F: Field> DerivedSeries<F> {
    /// `V^(k)`, continuing the stable tail past the stored terms.
    pub fn term(&self, k: usize) -> &Subspace<F> {
        &self.terms[k.min(self.terms.len() - 1)]
    }

    pub fn is_solvable(&self) -> bool {
        self.terms.last().is_some_and(Subspace::is_zero)
    }

    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(Subspace::dim).collect()
    }
}

pub fn derived_series<F: Field>(a: &HomAlgebra<F>) -> DerivedSeries<F> {
    let mut terms = vec![Subspace::full(a.dim())];
    loop {
        let last = terms.last().unwrap();
        if last.is_zero() {
            break;
        }
        let next = subspace_product(a, last, last).expect("ambient dimensions agree");
        if &next == last {
            break;
        }
        terms.push(next);
    }
    DerivedSeries { terms }
}

pub fn is_solvable<F: Field>(a: &HomAlgebra<F>) -> bool {
    derived_series(a).is_solvable()
}

/// Both derived series of a Jordan algebra and of its twist by an automorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolvabilityTransfer<F> {
    pub jordan_series: DerivedSeries<F>,
    pub twisted_series: DerivedSeries<F>,
    /// For each `k`, whether the twisted term equals `α^k(V^(k))`.
    pub term_agreement: Vec<bool>,
    pub jordan_solvable: bool,
    pub twisted_solvable: bool,
}

impl<F> SolvabilityTransfer<F> {
    pub fn holds(&self) -> bool {
        self.term_agreement.iter().all(|&b| b) && self.jordan_solvable == self.twisted_solvable
    }
}

/// Twists `j` by the automorphism `alpha` and compares the two derived series
/// term by term against `Ṽ^(k) = α^k(V^(k))`.
pub fn solvability_transfer_check<F: Field>(
    j: &HomAlgebra<F>,
    alpha: &Matrix<F>,
) -> Result<SolvabilityTransfer<F>> {
    let plain = HomAlgebra::jordan(j.mu().clone())?;
    if !alpha.is_invertible() {
        return Err(Error::NotAutomorphism);
    }
    let hom = check_homomorphism(alpha, &plain, &plain)?;
    if !hom.get("preserves_product").is_some_and(|v| v.holds()) {
        return Err(Error::NotAutomorphism);
    }
    let twisted = HomAlgebra::new(j.mu().compose_left(alpha), alpha.clone())?;
    let js = derived_series(&plain);
    let ts = derived_series(&twisted);
    let len = js.terms.len().max(ts.terms.len()) + 1;
    let mut power = Matrix::identity(j.dim());
    let mut term_agreement = Vec::with_capacity(len);
    for k in 0..len {
        let expected = js.term(k).image_under(&power)?;
        term_agreement.push(&expected == ts.term(k));
        power = &power * alpha;
    }
    Ok(SolvabilityTransfer {
        jordan_solvable: js.is_solvable(),
        twisted_solvable: ts.is_solvable(),
        jordan_series: js,
        twisted_series: ts,
        term_agreement,
    })
}
