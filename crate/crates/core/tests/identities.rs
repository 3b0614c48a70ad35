mod common;

use common::{hom_jordan_sides, jordan_sides, oracle_holds, sparse_algebra};
use homjordan::algebra_core::{
    check_hom_isomorphism_via_induced, check_hom_jordan, check_identity, check_jordan,
    CheckOptions, Identity, Outcome, Strategy as CheckStrategy,
};
use homjordan::constructions::{family_cyclic, family_dim2, fixture_example_4_4};
use homjordan::{Field, Gf3, Gf5, HomAlgebra, Matrix, Rational, Verdict};
use proptest::prelude::*;

fn gf5_algebra() -> impl Strategy<Value = HomAlgebra<Gf5>> {
    (
        1usize..=3,
        proptest::collection::vec(any::<u8>(), 18),
        proptest::collection::vec(any::<u8>(), 9),
        0u8..60,
    )
        .prop_map(|(n, mu, alpha, density)| sparse_algebra(n, &mu, &alpha, density))
}

fn verdict_of<F: Field>(a: &HomAlgebra<F>, id: Identity, s: CheckStrategy) -> Verdict<F> {
    check_identity(a, id, CheckOptions::with_strategy(s))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn polarized_matches_exhaustive_and_naive_oracle(a in gf5_algebra()) {
        let pol = verdict_of(&a, Identity::HomJordan, CheckStrategy::Polarized);
        let exh = verdict_of(&a, Identity::HomJordan, CheckStrategy::Exhaustive);
        prop_assert_eq!(pol.outcome(), exh.outcome());
        let naive = oracle_holds(&a, hom_jordan_sides);
        prop_assert_eq!(pol.holds(), naive);
    }

    #[test]
    fn witnesses_reproduce(a in gf5_algebra()) {
        for s in [CheckStrategy::Polarized, CheckStrategy::Exhaustive] {
            if let Verdict::Fails(w) = verdict_of(&a, Identity::HomJordan, s) {
                let (Some(x), Some(y)) = (w.input("x"), w.input("y")) else { continue };
                let (l, r) = hom_jordan_sides(&a, x, y);
                prop_assert_ne!(&l, &r);
                prop_assert_eq!((l, r), (w.lhs.clone(), w.rhs.clone()));
            }
        }
    }

    #[test]
    fn identity_twist_reduces_to_jordan(a in gf5_algebra()) {
        let plain = a.with_alpha(Matrix::identity(a.dim())).unwrap();
        let h = check_hom_jordan(&plain, CheckOptions::default());
        let j = check_jordan(&plain, CheckOptions::default()).unwrap();
        prop_assert_eq!(h.get("hom_jordan").unwrap().outcome(), j.get("jordan").unwrap().outcome());
        prop_assert_eq!(j.holds(), oracle_holds(&plain, jordan_sides));
    }

    #[test]
    fn induced_and_direct_isomorphism_verdicts_agree(
        entries in proptest::collection::vec(-2i64..=2, 4),
    ) {
        let a = fixture_example_4_4::<Rational>();
        let phi = Matrix::from_fn(2, 2, |r, c| Rational::from_i64(entries[r * 2 + c]));
        let rep = check_hom_isomorphism_via_induced(&phi, &a, &a).unwrap();
        prop_assert!(rep.get("agreement").unwrap().holds());
    }
}

#[test]
fn small_characteristic_uses_enumeration() {
    let a = fixture_example_4_4::<Gf3>();
    let v = check_identity(&a, Identity::HomJordan, CheckOptions::default());
    assert!(v.holds());
    let budget = CheckOptions {
        budget: 3,
        strategy: CheckStrategy::Auto,
    };
    let v = check_identity(&a, Identity::HomJordan, budget);
    assert_eq!(v.outcome(), Outcome::Undecidable);
}

#[test]
fn families_agree_with_naive_oracle_over_gf5() {
    for p in 0..5 {
        for q in 0..5 {
            let a = family_dim2(Gf5::from_i64(p), Gf5::from_i64(q));
            let v = check_hom_jordan(&a, CheckOptions::default());
            assert_eq!(v.holds(), oracle_holds(&a, hom_jordan_sides), "p={p} q={q}");
        }
    }
    for n in 3..=4 {
        let a = family_cyclic::<Gf5>(n, Matrix::identity(n)).unwrap();
        let v = check_hom_jordan(&a, CheckOptions::default());
        assert_eq!(v.holds(), oracle_holds(&a, hom_jordan_sides), "n={n}");
        assert!(!v.holds());
    }
}
