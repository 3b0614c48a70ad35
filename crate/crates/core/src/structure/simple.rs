use super::ideals::{ideal_closure, is_hom_ideal, restrict_algebra, subspace_product};
use super::semisimple::{
    decompose_semisimple, radical, sum_of, DecompositionResult, SearchOptions,
};
use crate::algebra_core::{check_hom_jordan, check_multiplicative, CheckOptions, HomAlgebra};
use crate::error::{Error, Result};
use crate::exactla::{enumerate, vector, Subspace};
use crate::field::Field;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Simplicity<F> {
    Simple {
        /// Decomposition of the induced algebra (characteristic-0 path only).
        decomposition: Option<DecompositionResult<F>>,
        /// False only when a decomposition leaf was not proven simple.
        certified: bool,
    },
    NotSimple {
        reason: String,
        /// A proper nonzero Hom-ideal, when one exists.
        ideal: Option<Subspace<F>>,
    },
    Unsupported(String),
}

impl<F> Simplicity<F> {
    pub fn is_simple(&self) -> bool {
        matches!(self, Simplicity::Simple { .. })
    }

    pub fn label(&self) -> &'static str {
        match self {
            Simplicity::Simple { .. } => "simple",
            Simplicity::NotSimple { .. } => "not_simple",
            Simplicity::Unsupported(_) => "unsupported",
        }
    }
}

fn not_simple<F>(reason: impl Into<String>, ideal: Option<Subspace<F>>) -> Simplicity<F> {
    Simplicity::NotSimple {
        reason: reason.into(),
        ideal,
    }
}

/// The induced algebra `(V, α⁻¹∘μ)` carrying `α` along, so that orbit
/// computations on its ideals can use the twist.
pub fn induced_algebra<F: Field>(a: &HomAlgebra<F>) -> Result<HomAlgebra<F>> {
    HomAlgebra::new(a.induced_tensor()?, a.alpha().clone())
}

/// Decides Def. "no nontrivial Hom-ideals and `μ(V,V) = V`".
///
/// Dimension ≤ 1 and finite fields within budget are decided directly (the
/// finite-field search closes every line). Over ℚ the algebra must be
/// multiplicative: a nonzero kernel of `α` or a proper square refutes
/// simplicity, otherwise the induced algebra must be semisimple with its
/// simple ideals forming a single `α`-orbit, and a randomized search for a
/// proper Hom-ideal must come up empty. Without the Hom-Jordan identity only
/// the randomized search runs, so the answer is `NotSimple` or `Unsupported`.
pub fn is_simple<F: Field>(a: &HomAlgebra<F>, opts: &SearchOptions) -> Result<Simplicity<F>> {
    let n = a.dim();
    if n == 0 {
        return Ok(not_simple("zero-dimensional algebra", None));
    }
    let v = Subspace::full(n);
    let square = subspace_product(a, &v, &v)?;
    if n == 1 {
        return Ok(if square.is_full() {
            Simplicity::Simple {
                decomposition: None,
                certified: true,
            }
        } else {
            not_simple("μ(V, V) ≠ V", None)
        });
    }
    if F::characteristic() != 0 {
        return simple_by_lines(a, &square, opts.budget);
    }
    if !check_multiplicative(a).holds() {
        return Err(Error::NotMultiplicative);
    }
    if a.alpha().is_zero() {
        return Ok(Simplicity::Unsupported("twist map is zero".into()));
    }
    let ker = a.kernel_alpha();
    if !ker.is_zero() {
        return Ok(not_simple("Ker(α) ≠ 0", Some(ker)));
    }
    if !square.is_full() {
        let ideal = (!square.is_zero()).then_some(square);
        return Ok(not_simple("μ(V, V) ≠ V", ideal));
    }
    if !hom_jordan(a, opts) {
        // The trace form and centroid say nothing here; only a found ideal counts.
        if let Some(c) = random_proper_closure(a, opts)? {
            return Ok(not_simple("random Hom-ideal closure is proper", Some(c)));
        }
        return Ok(Simplicity::Unsupported(
            "not Hom-Jordan and no proper Hom-ideal found by random search".into(),
        ));
    }
    let induced = induced_algebra(a)?;
    let rad = radical(&induced)?;
    if !rad.is_zero() {
        return Ok(not_simple("induced algebra has nonzero radical", Some(rad)));
    }
    let d = decompose_semisimple(&induced, opts)?;
    if !d.transitive {
        let first: Vec<&Subspace<F>> = d.orbit_partition[0].iter().map(|&i| &d.ideals[i]).collect();
        return Ok(not_simple(
            "simple ideals form several α-orbits",
            Some(sum_of(n, &first)),
        ));
    }
    if let Some(c) = random_proper_closure(a, opts)? {
        return Ok(not_simple("random Hom-ideal closure is proper", Some(c)));
    }
    let certified = d.certified;
    Ok(Simplicity::Simple {
        decomposition: Some(d),
        certified,
    })
}

fn hom_jordan<F: Field>(a: &HomAlgebra<F>, opts: &SearchOptions) -> bool {
    let check = CheckOptions {
        budget: opts.budget,
        ..CheckOptions::default()
    };
    check_hom_jordan(a, check).holds()
}

fn random_proper_closure<F: Field>(
    a: &HomAlgebra<F>,
    opts: &SearchOptions,
) -> Result<Option<Subspace<F>>> {
    let mut rng = opts.rng();
    for _ in 0..opts.trials {
        let x: Vec<F> = vector::random(a.dim(), &mut rng);
        if vector::is_zero(&x) {
            continue;
        }
        let c = ideal_closure(a, vec![x])?;
        if !c.is_full() {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

/// Every nonzero Hom-ideal contains the closure of one of its lines.
fn simple_by_lines<F: Field>(
    a: &HomAlgebra<F>,
    square: &Subspace<F>,
    budget: u128,
) -> Result<Simplicity<F>> {
    let n = a.dim();
    let points = match enumerate::projective_points::<F>(n, budget) {
        Ok(p) => p,
        Err(Error::BudgetExceeded { needed, budget }) => {
            return Ok(Simplicity::Unsupported(format!(
                "enumeration budget exceeded: {needed} > {budget}"
            )))
        }
        Err(e) => return Err(e),
    };
    for x in points {
        let c = ideal_closure(a, vec![x])?;
        if !c.is_full() {
            return Ok(not_simple(
                "proper Hom-ideal found by exhaustive search",
                Some(c),
            ));
        }
    }
    if !square.is_full() {
        return Ok(not_simple("μ(V, V) ≠ V", None));
    }
    Ok(Simplicity::Simple {
        decomposition: None,
        certified: true,
    })
}

/// A decomposition into simple Hom-ideals (the `α`-orbit sums of the simple
/// ideals of the induced algebra).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomDecomposition<F> {
    pub summands: Vec<Subspace<F>>,
    pub induced: DecompositionResult<F>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Semisimplicity<F> {
    Semisimple(HomDecomposition<F>),
    NotSemisimple(String),
}

impl<F> Semisimplicity<F> {
    pub fn is_semisimple(&self) -> bool {
        matches!(self, Semisimplicity::Semisimple(_))
    }
}

pub fn is_semisimple<F: Field>(
    a: &HomAlgebra<F>,
    opts: &SearchOptions,
) -> Result<Semisimplicity<F>> {
    if F::characteristic() != 0 {
        return Err(Error::UnsupportedCharacteristic(F::characteristic()));
    }
    if !check_multiplicative(a).holds() {
        return Err(Error::NotMultiplicative);
    }
    if !a.alpha_invertible() {
        return Ok(Semisimplicity::NotSemisimple(
            "twist map is singular".into(),
        ));
    }
    if !hom_jordan(a, opts) {
        return Err(Error::PreconditionFailed(
            "algebra is not Hom-Jordan".into(),
        ));
    }
    let induced = induced_algebra(a)?;
    let rad = radical(&induced)?;
    if !rad.is_zero() {
        return Ok(Semisimplicity::NotSemisimple(format!(
            "induced algebra has a radical of dimension {}",
            rad.dim()
        )));
    }
    let d = decompose_semisimple(&induced, opts)?;
    let n = a.dim();
    let mut summands = Vec::with_capacity(d.orbit_partition.len());
    for (k, orbit) in d.orbit_partition.iter().enumerate() {
        let refs: Vec<&Subspace<F>> = orbit.iter().map(|&i| &d.ideals[i]).collect();
        let s = sum_of(n, &refs);
        if !is_hom_ideal(a, &s) {
            return Ok(Semisimplicity::NotSemisimple(format!(
                "orbit sum {k} is not a Hom-ideal"
            )));
        }
        let sub = restrict_algebra(a, &s)?;
        if !is_simple(&sub, opts)?.is_simple() {
            return Ok(Semisimplicity::NotSemisimple(format!(
                "orbit sum {k} is not simple"
            )));
        }
        summands.push(s);
    }
    Ok(Semisimplicity::Semisimple(HomDecomposition {
        summands,
        induced: d,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra_core::StructureTensor;
    use crate::exactla::Matrix;
    use crate::field::{Fp, Rational};

    type Q = Rational;

    fn ex44<F: Field>() -> HomAlgebra<F> {
        let mu =
            StructureTensor::from_entries(2, &[(0, 0, 1, F::one()), (1, 1, 0, F::one())]).unwrap();
        HomAlgebra::new(mu, Matrix::from_i64(&[&[0, 1], &[1, 0]])).unwrap()
    }

    fn pair<F: Field>(a: &HomAlgebra<F>) -> HomAlgebra<F> {
        HomAlgebra::new(a.mu().direct_sum(a.mu()), a.alpha().block_diag(a.alpha())).unwrap()
    }

    #[test]
    fn non_hom_jordan_is_not_refuted_by_the_trace_form() {
        // a_i a_{i+1} = a_{i+2}: simple, but not Jordan.
        let e: Vec<_> = (0..3)
            .map(|i| (i, (i + 1) % 3, (i + 2) % 3, Q::from_i64(1)))
            .collect();
        let a = HomAlgebra::new(
            StructureTensor::from_entries(3, &e).unwrap(),
            Matrix::identity(3),
        )
        .unwrap();
        assert!(matches!(
            is_simple(&a, &SearchOptions::default()).unwrap(),
            Simplicity::Unsupported(_)
        ));
        assert!(matches!(
            is_semisimple(&a, &SearchOptions::default()),
            Err(Error::PreconditionFailed(_))
        ));
        let g = HomAlgebra::new(
            StructureTensor::from_entries(
                3,
                &e.iter()
                    .map(|&(i, j, k, _)| (i, j, k, Fp::<5>::from_i64(1)))
                    .collect::<Vec<_>>(),
            )
            .unwrap(),
            Matrix::identity(3),
        )
        .unwrap();
        assert!(is_simple(&g, &SearchOptions::default())
            .unwrap()
            .is_simple());
    }

    #[test]
    fn example_is_simple_over_q_and_small_fields() {
        let s = is_simple(&ex44::<Q>(), &SearchOptions::default()).unwrap();
        match s {
            Simplicity::Simple {
                decomposition: Some(d),
                certified,
            } => {
                assert!(certified);
                assert_eq!(d.ideals.len(), 2);
                assert_eq!(d.orbit_partition, vec![vec![0, 1]]);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(is_simple(&ex44::<Fp<3>>(), &SearchOptions::default())
            .unwrap()
            .is_simple());
        assert!(is_simple(&ex44::<Fp<2>>(), &SearchOptions::default())
            .unwrap()
            .is_simple());
    }

    #[test]
    fn direct_sum_is_not_simple_but_semisimple() {
        let b = pair(&ex44::<Q>());
        match is_simple(&b, &SearchOptions::default()).unwrap() {
            Simplicity::NotSimple { ideal: Some(w), .. } => {
                assert!(is_hom_ideal(&b, &w));
                assert_eq!(w.dim(), 2);
            }
            other => panic!("unexpected {other:?}"),
        }
        match is_semisimple(&b, &SearchOptions::default()).unwrap() {
            Semisimplicity::Semisimple(h) => assert_eq!(h.summands.len(), 2),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn non_multiplicative_input_is_rejected_over_q() {
        let mu = StructureTensor::from_entries(
            2,
            &[(0, 0, 0, Q::from_i64(1)), (1, 1, 1, Q::from_i64(1))],
        )
        .unwrap();
        let a = HomAlgebra::new(mu, Matrix::from_i64(&[&[2, 0], &[0, 1]])).unwrap();
        assert_eq!(
            is_simple(&a, &SearchOptions::default()),
            Err(Error::NotMultiplicative)
        );
    }

    #[test]
    fn one_dimensional_cases() {
        let mu = StructureTensor::from_entries(1, &[(0, 0, 0, Q::from_i64(1))]).unwrap();
        for k in [-1, 1, 2, 3] {
            let a = HomAlgebra::new(mu.clone(), Matrix::from_i64(&[&[k]])).unwrap();
            assert!(is_simple(&a, &SearchOptions::default())
                .unwrap()
                .is_simple());
        }
        let z = HomAlgebra::<Q>::zero(1, Matrix::identity(1)).unwrap();
        assert!(!is_simple(&z, &SearchOptions::default())
            .unwrap()
            .is_simple());
    }
}
