use super::rep::{BimoduleRep, JordanModuleRep};
use crate::algebra_core::{Verdict, VerificationReport, Witness};
use crate::exactla::{vector, Matrix};
use crate::field::Field;

/// First basis quadruple `(a, b, c, w)` where the operator identity fails.
fn quadruple_verdict<F: Field>(
    n: usize,
    m: usize,
    mut sides: impl FnMut(&[F], &[F], &[F]) -> (Matrix<F>, Matrix<F>),
) -> Verdict<F> {
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (a, b, c) = (vector::unit(n, i), vector::unit(n, j), vector::unit(n, k));
                let (lhs, rhs) = sides(&a, &b, &c);
                if lhs == rhs {
                    continue;
                }
                let l = (0..m)
                    .find(|&l| lhs.column(l) != rhs.column(l))
                    .expect("matrices differ");
                return Verdict::Fails(Witness::new(
                    vec![("a", a), ("b", b), ("c", c), ("w", vector::unit(m, l))],
                    lhs.column(l),
                    rhs.column(l),
                ));
            }
        }
    }
    Verdict::Holds
}

fn sum3<F: Field>(x: Matrix<F>, y: Matrix<F>, z: Matrix<F>) -> Matrix<F> {
    &(&x + &y) + &z
}

/// The two twisted compatibility identities, on all basis quadruples.
///
/// With `L(x)` the action of `x`:
/// `Σ_cyc L(α μ(b,c)) α_W L(a) = Σ_cyc L(α² a) L(μ(b,c)) α_W` and
/// `Σ_cyc L(α μ(b,c)) α_W L(a) = L(α²c) L(αb) L(a) + L(α²a) L(αb) L(c) + L(μ(μ(a,c), αb)) α_W²`.
pub fn check_bimodule<F: Field>(r: &BimoduleRep<F>) -> VerificationReport<F> {
    let alg = r.algebra();
    let (n, m) = (alg.dim(), r.dim());
    let aw = r.alpha_w();
    let aw2 = aw * aw;
    let alpha2 = alg.alpha() * alg.alpha();
    let l = |x: &[F]| r.action(x);
    let al = |x: &[F]| alg.apply_alpha(x);
    let a2 = |x: &[F]| alpha2.mul_vec(x);
    let common = |a: &[F], b: &[F], c: &[F]| {
        let t = |x: &[F], y: &[F], z: &[F]| &(&l(&al(&alg.mul(y, z))) * aw) * &l(x);
        sum3(t(a, b, c), t(b, c, a), t(c, a, b))
    };
    let second = quadruple_verdict(n, m, |a, b, c| {
        let t = |x: &[F], y: &[F], z: &[F]| &(&l(&a2(x)) * &l(&alg.mul(y, z))) * aw;
        (common(a, b, c), sum3(t(a, b, c), t(b, c, a), t(c, a, b)))
    });
    let third = quadruple_verdict(n, m, |a, b, c| {
        let ab = l(&al(b));
        let rhs = sum3(
            &(&l(&a2(c)) * &ab) * &l(a),
            &(&l(&a2(a)) * &ab) * &l(c),
            &l(&alg.mul(&alg.mul(a, c), &al(b))) * &aw2,
        );
        (common(a, b, c), rhs)
    });
    let mut rep = VerificationReport::single("bimodule_identity_2", second);
    rep.push("bimodule_identity_3", third);
    rep
}

/// `α_W ∘ L(e_a) = L(α(e_a)) ∘ α_W` for every basis element.
pub fn check_equivariance<F: Field>(r: &BimoduleRep<F>) -> VerificationReport<F> {
    let alg = r.algebra();
    let aw = r.alpha_w();
    for i in 0..alg.dim() {
        let lhs = aw * &r.lambda()[i];
        let rhs = &r.action(&alg.apply_alpha(&alg.basis_vector(i))) * aw;
        if lhs != rhs {
            let l = (0..r.dim())
                .find(|&l| lhs.column(l) != rhs.column(l))
                .expect("matrices differ");
            return VerificationReport::single(
                "equivariance",
                Verdict::Fails(Witness::new(
                    vec![("a", alg.basis_vector(i)), ("w", vector::unit(r.dim(), l))],
                    lhs.column(l),
                    rhs.column(l),
                )),
            );
        }
    }
    VerificationReport::single("equivariance", Verdict::Holds)
}

/// The two module identities of a Jordan module, on all basis quadruples;
/// `a∘c∘b` is read as `(a∘c)∘b`.
pub fn check_jordan_module<F: Field>(r: &JordanModuleRep<F>) -> VerificationReport<F> {
    let j = r.algebra();
    let (n, m) = (j.dim(), r.dim());
    let l = |x: &[F]| r.action(x);
    // Σ_cyc (x·a)·(b∘c)
    let common = |a: &[F], b: &[F], c: &[F]| {
        let t = |x: &[F], y: &[F], z: &[F]| &l(&j.mul(y, z)) * &l(x);
        sum3(t(a, b, c), t(b, c, a), t(c, a, b))
    };
    let second = quadruple_verdict(n, m, |a, b, c| {
        let t = |x: &[F], y: &[F], z: &[F]| &l(x) * &l(&j.mul(y, z));
        (common(a, b, c), sum3(t(a, b, c), t(b, c, a), t(c, a, b)))
    });
    let third = quadruple_verdict(n, m, |a, b, c| {
        let lhs = sum3(
            &(&l(c) * &l(b)) * &l(a),
            &(&l(a) * &l(b)) * &l(c),
            l(&j.mul(&j.mul(a, c), b)),
        );
        (lhs, common(a, b, c))
    });
    let mut rep = VerificationReport::single("module_identity_2", second);
    rep.push("module_identity_3", third);
    rep
}
