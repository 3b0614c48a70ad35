mod common;

use common::{naive_apply, naive_mul};
use homjordan::algebra_core::{check_hom_jordan, check_multiplicative, CheckOptions};
use homjordan::bimodule::{
    bimodule_to_module, check_bimodule, check_equivariance, check_jordan_module, invariant_closure,
    irreducibility_of, is_irreducible, is_submodule, kernel_image_analysis, module_to_bimodule,
    rank_one_fixture, regular_bimodule, scalar_line_module, submodule_closure, Irreducibility,
};
use homjordan::constructions::fixtures::{jordan_twist_pairs, small_corpus};
use homjordan::constructions::{fixture_example_4_4, yau_twist};
use homjordan::{BimoduleRep, Field, Gf2, Gf3, Matrix, Rational, SearchOptions};
use proptest::prelude::*;

type Q = Rational;

fn act<F: Field>(r: &BimoduleRep<F>, a: &[F], w: &[F]) -> Vec<F> {
    let m = r.dim();
    let mut out = vec![F::zero(); m];
    for (i, coef) in a.iter().enumerate() {
        let v = naive_apply(&r.lambda()[i], w);
        for k in 0..m {
            out[k] = out[k].clone() + coef.clone() * v[k].clone();
        }
    }
    out
}

/// Both compatibility identities evaluated on vectors, right to left.
fn identities_at<F: Field>(r: &BimoduleRep<F>, a: &[F], b: &[F], c: &[F], w: &[F]) -> bool {
    let alg = r.algebra();
    let al = |x: &[F]| naive_apply(alg.alpha(), x);
    let aw = |x: &[F]| naive_apply(r.alpha_w(), x);
    let mu = |x: &[F], y: &[F]| naive_mul(alg.mu(), x, y);
    let add = |x: Vec<F>, y: Vec<F>| x.into_iter().zip(y).map(|(p, q)| p + q).collect::<Vec<F>>();
    let cyc = [(a, b, c), (b, c, a), (c, a, b)];
    let lhs = cyc
        .iter()
        .map(|(x, y, z)| act(r, &al(&mu(y, z)), &aw(&act(r, x, w))))
        .reduce(add)
        .unwrap();
    let rhs2 = cyc
        .iter()
        .map(|(x, y, z)| act(r, &al(&al(x)), &act(r, &mu(y, z), &aw(w))))
        .reduce(add)
        .unwrap();
    let rhs3 = add(
        add(
            act(r, &al(&al(c)), &act(r, &al(b), &act(r, a, w))),
            act(r, &al(&al(a)), &act(r, &al(b), &act(r, c, w))),
        ),
        act(r, &mu(&mu(a, c), &al(b)), &aw(&aw(w))),
    );
    lhs == rhs2 && lhs == rhs3
}

fn equivariant_fixtures() -> Vec<(String, BimoduleRep<Q>)> {
    let mut out: Vec<(String, BimoduleRep<Q>)> = jordan_twist_pairs::<Q>()
        .unwrap()
        .into_iter()
        .map(|(name, j, alpha)| (name, regular_bimodule(&yau_twist(&j, &alpha).unwrap())))
        .collect();
    let ex = fixture_example_4_4::<Q>();
    out.push(("ex4_4_regular".into(), regular_bimodule(&ex)));
    out.push((
        "ex4_4_half_line".into(),
        scalar_line_module(&ex, Q::new(1.into(), 2.into())),
    ));
    out
}

#[test]
fn regular_bimodules_of_hom_jordan_corpus() {
    for (name, a) in small_corpus::<Q>() {
        if !check_hom_jordan(&a, CheckOptions::default()).holds() {
            continue;
        }
        let ok = check_bimodule(&regular_bimodule(&a)).holds();
        if check_multiplicative(&a).holds() {
            assert!(ok, "{name}");
        }
    }
}

/// `μ(e,e) = e`, `α = 2`: Hom-Jordan but not multiplicative, and identity (2)
/// at `a = b = c = w = e` reads `12e = 24e`.
#[test]
fn regular_bimodule_needs_multiplicativity() {
    let a = homjordan::constructions::family_dim1(Q::from_i64(2));
    assert!(check_hom_jordan(&a, CheckOptions::default()).holds());
    assert!(!check_multiplicative(&a).holds());
    let r = regular_bimodule(&a);
    let w = check_bimodule(&r)
        .get("bimodule_identity_2")
        .unwrap()
        .witness()
        .unwrap()
        .clone();
    assert_eq!(
        (w.lhs, w.rhs),
        (vec![Q::from_i64(12)], vec![Q::from_i64(24)])
    );
}

#[test]
fn transport_round_trip() {
    let fixtures = equivariant_fixtures();
    assert!(fixtures.len() >= 10);
    for (name, r) in fixtures {
        assert!(check_bimodule(&r).holds(), "{name}");
        assert!(check_equivariance(&r).holds(), "{name}");
        let m = bimodule_to_module(&r).unwrap();
        assert!(check_jordan_module(&m).holds(), "{name}");
        let back = module_to_bimodule(&m, r.algebra().alpha(), r.alpha_w()).unwrap();
        assert_eq!(back, r, "{name}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn operator_check_matches_vector_evaluation(
        idx in 0usize..40,
        xs in proptest::collection::vec(-2i64..=2, 16),
    ) {
        let fixtures = equivariant_fixtures();
        let (_, r) = &fixtures[idx % fixtures.len()];
        let (n, m) = (r.algebra().dim(), r.dim());
        let v = |o: usize, len: usize| (0..len).map(|i| Q::from_i64(xs[(o + i) % 16])).collect::<Vec<_>>();
        let holds = check_bimodule(r).holds();
        prop_assert!(holds);
        prop_assert!(identities_at(r, &v(0, n), &v(4, n), &v(8, n), &v(12, m)));
    }

    #[test]
    fn submodule_closure_is_least_invariant(
        idx in 0usize..40,
        xs in proptest::collection::vec(-2i64..=2, 4),
    ) {
        let fixtures = equivariant_fixtures();
        let (_, r) = &fixtures[idx % fixtures.len()];
        let m = r.dim();
        let g: Vec<Q> = (0..m).map(|i| Q::from_i64(xs[i % 4])).collect();
        let c = submodule_closure(r, vec![g.clone()]).unwrap();
        prop_assert!(c.contains(&g));
        prop_assert!(is_submodule(r, &c));
        prop_assert_eq!(&submodule_closure(r, c.basis_vectors()).unwrap(), &c);
    }
}

#[test]
fn char_two_line_module_fails_third_identity() {
    let ex = fixture_example_4_4::<Gf2>();
    let r = scalar_line_module(&ex, Gf2::from_i64(1));
    let report = check_bimodule(&r);
    assert!(report.get("bimodule_identity_2").unwrap().holds());
    let w = report
        .get("bimodule_identity_3")
        .unwrap()
        .witness()
        .unwrap()
        .clone();
    let (a, b, c, x) = (
        w.input("a").unwrap(),
        w.input("b").unwrap(),
        w.input("c").unwrap(),
        w.input("w").unwrap(),
    );
    assert!(!identities_at(&r, a, b, c, x));
}

#[test]
fn randomized_irreducibility_agrees_with_exhaustive_over_gf3() {
    let exhaustive = SearchOptions::default();
    let randomized = SearchOptions {
        budget: 0,
        ..SearchOptions::default()
    };
    for (name, a) in small_corpus::<Gf3>() {
        let r = regular_bimodule(&a);
        if r.dim() == 0 {
            continue;
        }
        let e = is_irreducible(&r, &exhaustive).unwrap();
        let p = is_irreducible(&r, &randomized).unwrap();
        assert_eq!(e.is_irreducible_like(), p.is_irreducible_like(), "{name}");
        if let Irreducibility::Reducible(w) = p {
            assert!(is_submodule(&r, &w) && !w.is_zero() && !w.is_full());
        }
    }
}

#[test]
fn rank_deficient_kernel_image() {
    let ex = fixture_example_4_4::<Q>();
    let r = rank_one_fixture(&ex).unwrap();
    assert!(check_bimodule(&r).holds());
    let k = kernel_image_analysis(&r).unwrap();
    assert!(k.report.holds());
    assert_eq!((k.kernel.dim(), k.image.dim()), (1, 1));
}

#[test]
fn closure_of_nothing_is_zero() {
    let ops = vec![Matrix::<Q>::identity(2)];
    assert!(invariant_closure(2, &ops, vec![]).unwrap().is_zero());
    assert!(irreducibility_of::<Q>(0, &ops, &SearchOptions::default()).is_err());
}
