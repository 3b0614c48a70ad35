use super::*;
use crate::algebra_core::Outcome;
use crate::constructions::{fixture_example_4_4, induced_jordan};
use crate::exactla::{vector, Matrix, Subspace};
use crate::field::{Field, Fp, Rational};
use crate::structure::SearchOptions;

type Q = Rational;

#[test]
fn regular_bimodule_of_example() {
    let r = regular_bimodule(&fixture_example_4_4::<Q>());
    assert!(check_bimodule(&r).holds());
    assert!(check_equivariance(&r).holds());
}

#[test]
fn zero_algebra_regular_bimodule() {
    let z = crate::HomAlgebra::<Q>::zero(2, Matrix::identity(2)).unwrap();
    let r = regular_bimodule(&z);
    assert!(r.lambda().iter().all(Matrix::is_zero));
    assert!(check_bimodule(&r).holds());
}

#[test]
fn characteristic_two_line_module() {
    let a = fixture_example_4_4::<Fp<2>>();
    let r = scalar_line_module(&a, Fp::new(1));
    assert!(check_equivariance(&r).holds());
    let rep = check_bimodule(&r);
    // The third identity fails at (e₁, e₁, e₂): w₁ on the left, 2w₁ = 0 on the right.
    assert!(rep.get("bimodule_identity_2").unwrap().holds());
    let w = rep
        .get("bimodule_identity_3")
        .unwrap()
        .witness()
        .unwrap()
        .clone();
    assert_eq!(w.input("c").unwrap(), &[Fp::new(0), Fp::new(1)]);
    assert_eq!((w.lhs, w.rhs), (vec![Fp::new(1)], vec![Fp::new(0)]));
}

#[test]
fn half_scalar_line_module_is_a_bimodule() {
    let a = fixture_example_4_4::<Q>();
    assert!(check_bimodule(&scalar_line_module(&a, Q::new(1.into(), 2.into()))).holds());
    let one = check_bimodule(&scalar_line_module(&a, Q::from_i64(1)));
    assert_eq!(one.outcome(), Outcome::Fails);
}

#[test]
fn equivariance_fails_for_zero_twist() {
    let a = fixture_example_4_4::<Q>();
    let r = BimoduleRep::new(
        a.clone(),
        Matrix::zeros(2, 2),
        regular_bimodule(&a).lambda().to_vec(),
    )
    .unwrap();
    // α_W = 0 with nonzero actions: both sides vanish, so equivariance holds trivially
    assert!(check_equivariance(&r).holds());
    let s = BimoduleRep::new(
        a.clone(),
        Matrix::identity(2),
        regular_bimodule(&a).lambda().to_vec(),
    )
    .unwrap();
    assert!(!check_equivariance(&s).holds());
}

#[test]
fn transport_round_trip() {
    let a = fixture_example_4_4::<Q>();
    let r = regular_bimodule(&a);
    let m = bimodule_to_module(&r).unwrap();
    assert_eq!(m, {
        let mut reg = regular_module(&induced_jordan(&a).unwrap());
        reg.alpha_w = Some(a.alpha().clone());
        reg
    });
    assert!(check_jordan_module(&m).holds());
    assert_eq!(module_to_bimodule(&m, a.alpha(), r.alpha_w()).unwrap(), r);
}

#[test]
fn hom_actions_are_not_a_module_of_the_induced_algebra() {
    let a = fixture_example_4_4::<Q>();
    let j = induced_jordan(&a).unwrap();
    let m = JordanModuleRep::new(&j, 2, regular_bimodule(&a).lambda().to_vec()).unwrap();
    assert_eq!(check_jordan_module(&m).outcome(), Outcome::Fails);
    assert!(check_jordan_module(
        &JordanModuleRep::new(&j, 3, vec![Matrix::zeros(3, 3); 2]).unwrap()
    )
    .holds());
}

#[test]
fn singular_twist_cannot_be_transported() {
    let a = fixture_example_4_4::<Q>();
    let r = zero_bimodule(&a, Matrix::zeros(1, 1)).unwrap();
    assert_eq!(bimodule_to_module(&r), Err(crate::Error::Singular));
}

#[test]
fn closures() {
    let a = fixture_example_4_4::<Q>();
    let r = regular_bimodule(&a);
    assert!(submodule_closure(&r, vec![]).unwrap().is_zero());
    assert!(submodule_closure(&r, vec![vector::unit(2, 0)])
        .unwrap()
        .is_full());
    let line = scalar_line_module(&fixture_example_4_4::<Fp<2>>(), Fp::new(1));
    assert!(submodule_closure(&line, vec![vector::unit(1, 0)])
        .unwrap()
        .is_full());
}

#[test]
fn irreducibility_verdicts() {
    let o = SearchOptions::default();
    let a2 = fixture_example_4_4::<Fp<2>>();
    let line = scalar_line_module(&a2, Fp::new(1));
    assert_eq!(
        is_irreducible(&line, &o).unwrap(),
        Irreducibility::Irreducible
    );
    let pair = line.direct_sum(&line).unwrap();
    assert!(matches!(
        is_irreducible(&pair, &o).unwrap(),
        Irreducibility::Reducible(_)
    ));
    let a3 = fixture_example_4_4::<Fp<3>>();
    assert_eq!(
        is_irreducible(&regular_bimodule(&a3), &o).unwrap(),
        Irreducibility::Irreducible
    );
    let q = regular_bimodule(&fixture_example_4_4::<Q>());
    assert_eq!(
        is_irreducible(&q, &o).unwrap(),
        Irreducibility::ProbablyIrreducible
    );
}

#[test]
fn kernel_and_image_of_rank_one_twist() {
    let a = fixture_example_4_4::<Q>();
    let r = rank_one_fixture(&a).unwrap();
    assert!(check_bimodule(&r).holds());
    let k = kernel_image_analysis(&r).unwrap();
    assert!(k.report.holds(), "{:?}", k.report);
    assert_eq!((k.kernel.dim(), k.image.dim()), (1, 1));
    let inv = kernel_image_analysis(&regular_bimodule(&a)).unwrap();
    assert!(inv.report.holds());
    assert!(inv.kernel.is_zero() && inv.image.is_full());
    let z = kernel_image_analysis(&zero_bimodule(&a, Matrix::zeros(2, 2)).unwrap()).unwrap();
    assert!(z.report.holds());
    assert_eq!(z.kernel, Subspace::full(2));
}

#[test]
fn irreducibility_transfer() {
    let o = SearchOptions::default();
    let a3 = fixture_example_4_4::<Fp<3>>();
    let t = irreducibility_transfer_check(&regular_bimodule(&a3), &o).unwrap();
    assert!(t.report.holds());
    assert!(matches!(t.module, Some(Irreducibility::Reducible(ref w)) if w.dim() == 1));
    // a one-dimensional module with zero twist has exactly two submodules
    let z = zero_bimodule(&a3, Matrix::zeros(1, 1)).unwrap();
    let t = irreducibility_transfer_check(&z, &o).unwrap();
    assert!(t
        .report
        .get("irreducible_implies_invertible_twist")
        .unwrap()
        .fails());
}
