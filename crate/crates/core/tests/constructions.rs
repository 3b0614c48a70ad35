mod common;

use common::{hom_jordan_sides, naive_apply, naive_mul, oracle_holds};
use homjordan::algebra_core::{
    check_hom_jordan, check_homomorphism, check_isomorphism, check_multiplicative, CheckOptions,
};
use homjordan::constructions::fixtures::{gaussian_pair, jordan_twist_pairs, small_corpus};
use homjordan::constructions::{
    classification_signature, compare_signatures, complement_change, family_dim1,
    fixture_example_4_4, induced_jordan, iso_search_smallfield, lift_ideal_isomorphism,
    projection_fixture, quotient_algebra, quotient_with_complement, split_idempotent_alpha,
    standard_complement, yau_twist, SignatureComparison,
};
use homjordan::exactla::vector;
use homjordan::structure::ideal_closure;
use homjordan::{Error, Field, Fp, Gf3, Matrix, Rational, SearchOptions, Subspace};
use proptest::prelude::*;

type Gf7 = Fp<7>;

#[test]
fn twist_round_trip_over_rationals() {
    let pairs = jordan_twist_pairs::<Rational>().unwrap();
    assert!(pairs.len() >= 20);
    for (name, j, alpha) in pairs {
        let t = yau_twist(&j, &alpha).unwrap();
        assert!(
            check_hom_jordan(&t, CheckOptions::default()).holds(),
            "{name}"
        );
        assert!(check_multiplicative(&t).holds(), "{name}");
        assert_eq!(induced_jordan(&t).unwrap().mu(), j.mu(), "{name}");
    }
}

/// The twists are checked against the naive oracle over GF(7).
#[test]
fn twists_satisfy_identity_by_enumeration() {
    for (name, j, alpha) in jordan_twist_pairs::<Gf7>().unwrap() {
        let t = yau_twist(&j, &alpha).unwrap();
        assert!(oracle_holds(&t, hom_jordan_sides), "{name}");
        for x in (0..t.dim()).map(|i| vector::unit::<Gf7>(t.dim(), i)) {
            for y in (0..t.dim()).map(|i| vector::unit::<Gf7>(t.dim(), i)) {
                let lhs = naive_apply(t.alpha(), &naive_mul(t.mu(), &x, &y));
                let rhs = naive_mul(
                    t.mu(),
                    &naive_apply(t.alpha(), &x),
                    &naive_apply(t.alpha(), &y),
                );
                assert_eq!(lhs, rhs, "{name}");
            }
        }
    }
}

#[test]
fn twist_by_non_endomorphism_is_rejected() {
    let (_, j, _) = jordan_twist_pairs::<Rational>().unwrap().remove(0);
    let mut bad = Matrix::identity(4);
    bad = &bad + &Matrix::from_fn(4, 4, |r, c| Rational::from_i64((r == 0 && c == 1) as i64));
    assert_eq!(yau_twist(&j, &bad), Err(Error::NotEndomorphism));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn quotient_does_not_depend_on_complement(
        idx in 0usize..32,
        gen in proptest::collection::vec(0i64..3, 3),
        shift in proptest::collection::vec(0i64..3, 9),
    ) {
        let corpus = small_corpus::<Gf3>();
        let (_, a) = &corpus[idx % corpus.len()];
        let n = a.dim();
        let g: Vec<Gf3> = (0..n).map(|i| Gf3::from_i64(gen[i])).collect();
        let i = ideal_closure(a, vec![g]).unwrap();
        let std = standard_complement(&i);
        // a second complement: shift each standard representative by ideal vectors
        let ib = i.basis_vectors();
        let other: Vec<Vec<Gf3>> = std
            .iter()
            .enumerate()
            .map(|(r, v)| {
                let coeffs: Vec<Gf3> = (0..ib.len()).map(|k| Gf3::from_i64(shift[(r * 3 + k) % 9])).collect();
                vector::add(v, &vector::combine(n, &coeffs, &ib))
            })
            .collect();
        let q1 = quotient_with_complement(a, &i, &std).unwrap();
        let q2 = quotient_with_complement(a, &i, &other).unwrap();
        let change = complement_change(&i, &std, &other).unwrap();
        prop_assert!(check_isomorphism(&change, &q1, &q2).unwrap().holds());
        prop_assert_eq!(&q1, &quotient_algebra(a, &i).unwrap());
        prop_assert!(check_homomorphism(&homjordan::constructions::quotient_projection(&i), a, &q1).unwrap().holds());
    }
}

#[test]
fn quotient_by_kernel_on_projection_fixture() {
    let a = projection_fixture::<Rational>();
    assert!(check_hom_jordan(&a, CheckOptions::default()).holds());
    let q = quotient_algebra(&a, &a.kernel_alpha()).unwrap();
    assert_eq!(q.dim(), 2);
    assert!(q.alpha_invertible());
    assert!(check_hom_jordan(&q, CheckOptions::default()).holds());
    assert!(check_multiplicative(&q).holds());
    let s = split_idempotent_alpha(&a).unwrap();
    assert!(s.holds());
    assert!(s.iso.is_invertible());
}

#[test]
fn split_rejects_non_idempotent_twist() {
    let a = fixture_example_4_4::<Rational>();
    assert!(matches!(
        split_idempotent_alpha(&a),
        Err(Error::PreconditionFailed(_))
    ));
}

#[test]
fn signatures_separate_the_fixtures() {
    let opts = SearchOptions::default();
    let ex = classification_signature(&fixture_example_4_4::<Rational>(), &opts).unwrap();
    assert_eq!((ex.ideal_dim(), ex.n), (1, 2));
    assert_eq!(ex.a1, Matrix::identity(1));
    let d1 = classification_signature(&family_dim1(Rational::from_i64(1)), &opts).unwrap();
    assert!(
        matches!(compare_signatures(&ex, &d1), SignatureComparison::Distinct(r) if r.starts_with("total_dim"))
    );
    let plain = classification_signature(&gaussian_pair::<Rational>(false), &opts).unwrap();
    let conj = classification_signature(&gaussian_pair::<Rational>(true), &opts).unwrap();
    assert_eq!((plain.ideal_dim(), plain.n), (2, 2));
    assert!(
        matches!(compare_signatures(&plain, &conj), SignatureComparison::Distinct(r) if r.starts_with("similarity"))
    );
    assert!(matches!(
        compare_signatures(&ex, &plain),
        SignatureComparison::Distinct(_)
    ));
    assert_eq!(
        compare_signatures(&plain, &plain),
        SignatureComparison::PossiblyIsomorphic
    );
    for seed in 1..4 {
        assert_eq!(
            classification_signature(
                &gaussian_pair::<Rational>(true),
                &SearchOptions::with_seed(seed)
            )
            .unwrap(),
            conj
        );
    }
}

#[test]
fn lifts_are_certified_isomorphisms() {
    let opts = SearchOptions::default();
    let ex = fixture_example_4_4::<Rational>();
    let phi = lift_ideal_isomorphism(&Matrix::identity(1), &ex, &ex, &opts).unwrap();
    assert!(check_isomorphism(&phi, &ex, &ex).unwrap().holds());
    let g = gaussian_pair::<Rational>(true);
    let phi = lift_ideal_isomorphism(&Matrix::identity(2), &g, &g, &opts).unwrap();
    assert!(check_isomorphism(&phi, &g, &g).unwrap().holds());
    assert_eq!(
        lift_ideal_isomorphism(&Matrix::from_i64(&[&[2]]), &ex, &ex, &opts),
        Err(Error::NotIdealIso)
    );
}

#[test]
fn small_field_search() {
    let opts = SearchOptions::default();
    let ex = fixture_example_4_4::<Gf3>();
    let phi = iso_search_smallfield(&ex, &ex, &opts).unwrap().unwrap();
    assert!(check_isomorphism(&phi, &ex, &ex).unwrap().holds());
    let plain = gaussian_pair::<Gf3>(false);
    let conj = gaussian_pair::<Gf3>(true);
    assert!(iso_search_smallfield(&plain, &conj, &opts)
        .unwrap()
        .is_none());
    assert!(iso_search_smallfield(&conj, &conj, &opts)
        .unwrap()
        .is_some());
    assert!(iso_search_smallfield(&ex, &plain, &opts).unwrap().is_none());
    assert_eq!(
        iso_search_smallfield(
            &fixture_example_4_4::<Rational>(),
            &fixture_example_4_4(),
            &opts
        ),
        Err(Error::UnsupportedCharacteristic(0))
    );
}

/// Brute force over every invertible `2×2` matrix over GF(3) agrees with the
/// lifted search on ex4_4.
#[test]
fn ex4_4_automorphisms_by_brute_force() {
    let ex = fixture_example_4_4::<Gf3>();
    let autos: Vec<Matrix<Gf3>> = common::all_vectors::<Gf3>(4)
        .into_iter()
        .map(|e| Matrix::from_fn(2, 2, |r, c| e[r * 2 + c]))
        .filter(|m| m.is_invertible() && check_isomorphism(m, &ex, &ex).unwrap().holds())
        .collect();
    assert!(!autos.is_empty());
    let found = iso_search_smallfield(&ex, &ex, &SearchOptions::default())
        .unwrap()
        .unwrap();
    assert!(autos.contains(&found));
}

#[test]
fn quotient_rejects_non_ideals() {
    let a = fixture_example_4_4::<Rational>();
    let line = Subspace::coordinate_span(2, &[0]);
    assert_eq!(quotient_algebra(&a, &line), Err(Error::NotAnIdeal));
}
