use std::fmt;

use super::hom_algebra::HomAlgebra;
use crate::error::{Error, Result};
use crate::exactla::enumerate::{self, DEFAULT_BUDGET};
use crate::exactla::{vector, Matrix};
use crate::field::Field;

/// Concrete inputs on which the two sides of an identity differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness<F> {
    pub inputs: Vec<(String, Vec<F>)>,
    pub lhs: Vec<F>,
    pub rhs: Vec<F>,
    pub note: Option<String>,
}

impl<F> Witness<F> {
    pub fn new(inputs: Vec<(&str, Vec<F>)>, lhs: Vec<F>, rhs: Vec<F>) -> Self {
        Witness {
            inputs: inputs
                .into_iter()
                .map(|(k, v)| (k.to_string(), v))
                .collect(),
            lhs,
            rhs,
            note: None,
        }
    }

    pub fn note(msg: impl Into<String>) -> Self {
        Witness {
            inputs: Vec::new(),
            lhs: Vec::new(),
            rhs: Vec::new(),
            note: Some(msg.into()),
        }
    }

    pub fn input(&self, name: &str) -> Option<&[F]> {
        self.inputs
            .iter()
            .find(|(k, _)| k == name)
            .map(|(_, v)| v.as_slice())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict<F> {
    Holds,
    Fails(Witness<F>),
    Undecidable(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Outcome {
    Holds,
    Fails,
    Undecidable,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Holds => "holds",
            Outcome::Fails => "fails",
            Outcome::Undecidable => "undecidable",
        })
    }
}

impl<F> Verdict<F> {
    pub fn outcome(&self) -> Outcome {
        match self {
            Verdict::Holds => Outcome::Holds,
            Verdict::Fails(_) => Outcome::Fails,
            Verdict::Undecidable(_) => Outcome::Undecidable,
        }
    }

    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn fails(&self) -> bool {
        matches!(self, Verdict::Fails(_))
    }

    pub fn witness(&self) -> Option<&Witness<F>> {
        match self {
            Verdict::Fails(w) => Some(w),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check<F> {
    pub name: String,
    pub verdict: Verdict<F>,
}

/// Named verdicts, in the order they were checked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport<F> {
    pub checks: Vec<Check<F>>,
}

impl<F> Default for VerificationReport<F> {
    fn default() -> Self {
        VerificationReport { checks: Vec::new() }
    }
}

impl<F> VerificationReport<F> {
    pub fn single(name: &str, verdict: Verdict<F>) -> Self {
        let mut r = Self::default();
        r.push(name, verdict);
        r
    }

    pub fn push(&mut self, name: &str, verdict: Verdict<F>) {
        self.checks.push(Check {
            name: name.to_string(),
            verdict,
        });
    }

    pub fn extend(&mut self, other: Self) {
        self.checks.extend(other.checks);
    }

    pub fn get(&self, name: &str) -> Option<&Verdict<F>> {
        self.checks
            .iter()
            .find(|c| c.name == name)
            .map(|c| &c.verdict)
    }

    /// Fails dominates Undecidable, which dominates Holds.
    pub fn outcome(&self) -> Outcome {
        self.checks
            .iter()
            .map(|c| c.verdict.outcome())
            .max()
            .unwrap_or(Outcome::Holds)
    }

    pub fn holds(&self) -> bool {
        self.outcome() == Outcome::Holds
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strategy {
    /// Polarization when 6 is invertible, enumeration otherwise.
    #[default]
    Auto,
    Polarized,
    Exhaustive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckOptions {
    pub budget: u128,
    pub strategy: Strategy,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            budget: DEFAULT_BUDGET,
            strategy: Strategy::Auto,
        }
    }
}

impl CheckOptions {
    pub fn with_strategy(strategy: Strategy) -> Self {
        CheckOptions {
            strategy,
            ..Self::default()
        }
    }
}

/// The cubic identities checked by polarization or enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Identity {
    /// `μ(α²x, μ(y, μ(x,x))) = μ(μ(αx, y), α μ(x,x))`
    HomJordan,
    /// `((x∘x)∘y)∘x = (x∘x)∘(y∘x)`
    Jordan,
}

impl Identity {
    /// Both sides as linear maps in `y` for fixed `x`.
    pub fn operators<F: Field>(self, a: &HomAlgebra<F>, x: &[F]) -> (Matrix<F>, Matrix<F>) {
        let xx = a.mul(x, x);
        match self {
            Identity::HomJordan => {
                let ax = a.apply_alpha(x);
                let aax = a.apply_alpha(&ax);
                let axx = a.apply_alpha(&xx);
                let lhs = &a.left_mult_by(&aax) * &a.left_mult_by(&xx);
                let rhs = &a.left_mult_by(&axx) * &a.left_mult_by(&ax);
                (lhs, rhs)
            }
            Identity::Jordan => {
                let lx = a.left_mult_by(x);
                let lxx = a.left_mult_by(&xx);
                (&lx * &lxx, &lxx * &lx)
            }
        }
    }

    pub fn evaluate<F: Field>(self, a: &HomAlgebra<F>, x: &[F], y: &[F]) -> (Vec<F>, Vec<F>) {
        let xx = a.mul(x, x);
        match self {
            Identity::HomJordan => {
                let ax = a.apply_alpha(x);
                let aax = a.apply_alpha(&ax);
                let lhs = a.mul(&aax, &a.mul(y, &xx));
                let rhs = a.mul(&a.mul(&ax, y), &a.apply_alpha(&xx));
                (lhs, rhs)
            }
            Identity::Jordan => {
                let lhs = a.mul(&a.mul(&xx, y), x);
                let rhs = a.mul(&xx, &a.mul(y, x));
                (lhs, rhs)
            }
        }
    }
}

fn defect<F: Field>(id: Identity, a: &HomAlgebra<F>, x: &[F]) -> Matrix<F> {
    let (l, r) = id.operators(a, x);
    &l - &r
}

fn first_nonzero_column<F: Field>(m: &Matrix<F>) -> Option<usize> {
    (0..m.cols()).find(|&c| (0..m.rows()).any(|r| !m.get(r, c).is_zero()))
}

/// Decides whether a cubic identity holds on all of `V`.
pub fn check_identity<F: Field>(a: &HomAlgebra<F>, id: Identity, opts: CheckOptions) -> Verdict<F> {
    let p = F::characteristic();
    let polarize = match opts.strategy {
        Strategy::Auto => F::factorial_invertible(3),
        Strategy::Polarized => {
            if !F::factorial_invertible(3) {
                return Verdict::Undecidable(format!(
                    "polarization of a cubic identity needs 6 invertible, characteristic is {p}"
                ));
            }
            true
        }
        Strategy::Exhaustive => false,
    };
    if polarize {
        polarized(a, id)
    } else {
        exhaustive(a, id, opts.budget)
    }
}

fn polarized<F: Field>(a: &HomAlgebra<F>, id: Identity) -> Verdict<F> {
    let n = a.dim();
    let e = |i: usize| vector::unit::<F>(n, i);
    for i in 0..n {
        for j in i..n {
            for k in j..n {
                let (ei, ej, ek) = (e(i), e(j), e(k));
                let d = |v: &[F]| defect(id, a, v);
                let ij = vector::add(&ei, &ej);
                let ijk = vector::add(&ij, &ek);
                // 6·T(e_i, e_j, e_k) by inclusion-exclusion over subsets.
                let plus = [d(&ijk), d(&ei), d(&ej), d(&ek)];
                let minus = [d(&ij), d(&vector::add(&ei, &ek)), d(&vector::add(&ej, &ek))];
                let mut t = Matrix::zeros(n, n);
                for m in &plus {
                    t = &t + m;
                }
                for m in &minus {
                    t = &t - m;
                }
                if let Some(l) = first_nonzero_column(&t) {
                    return Verdict::Fails(grid_witness(a, id, [i, j, k], l).unwrap_or_else(
                        || {
                            let mut w = Witness::new(
                                vec![("x1", ei), ("x2", ej), ("x3", ek), ("y", e(l))],
                                t.column(l),
                                vector::zeros(n),
                            );
                            w.note = Some("polarized defect".into());
                            w
                        },
                    ));
                }
            }
        }
    }
    Verdict::Holds
}

/// A nonzero polynomial of degree ≤ 3 in each variable cannot vanish on a
/// 4×4×4 grid, so this always finds a point once the polarization is nonzero.
fn grid_witness<F: Field>(
    a: &HomAlgebra<F>,
    id: Identity,
    idx: [usize; 3],
    l: usize,
) -> Option<Witness<F>> {
    let n = a.dim();
    let grid: Vec<F> = (0..4).map(F::from_i64).collect();
    let y = vector::unit::<F>(n, l);
    for s in &grid {
        for t in &grid {
            for u in &grid {
                let mut x = vector::zeros::<F>(n);
                vector::axpy(&mut x, s, &vector::unit(n, idx[0]));
                vector::axpy(&mut x, t, &vector::unit(n, idx[1]));
                vector::axpy(&mut x, u, &vector::unit(n, idx[2]));
                let (lhs, rhs) = id.evaluate(a, &x, &y);
                if lhs != rhs {
                    return Some(Witness::new(vec![("x", x), ("y", y)], lhs, rhs));
                }
            }
        }
    }
    None
}

fn exhaustive<F: Field>(a: &HomAlgebra<F>, id: Identity, budget: u128) -> Verdict<F> {
    let n = a.dim();
    let xs = match enumerate::all_vectors::<F>(n, budget) {
        Ok(xs) => xs,
        Err(Error::BudgetExceeded { needed, budget }) => {
            return Verdict::Undecidable(format!(
                "enumeration budget exceeded: {needed} vectors > {budget}"
            ))
        }
        Err(_) => {
            return Verdict::Undecidable("exhaustive enumeration needs a finite field".to_string())
        }
    };
    for x in xs {
        let d = defect(id, a, &x);
        if let Some(l) = first_nonzero_column(&d) {
            let y = vector::unit(n, l);
            let (lhs, rhs) = id.evaluate(a, &x, &y);
            return Verdict::Fails(Witness::new(vec![("x", x), ("y", y)], lhs, rhs));
        }
    }
    Verdict::Holds
}

pub fn commutativity_verdict<F: Field>(a: &HomAlgebra<F>) -> Verdict<F> {
    let n = a.dim();
    for i in 0..n {
        for j in i + 1..n {
            let (x, y) = (a.basis_vector(i), a.basis_vector(j));
            let (l, r) = (a.mul(&x, &y), a.mul(&y, &x));
            if l != r {
                return Verdict::Fails(Witness::new(vec![("x", x), ("y", y)], l, r));
            }
        }
    }
    Verdict::Holds
}

pub fn check_commutative<F: Field>(a: &HomAlgebra<F>) -> VerificationReport<F> {
    VerificationReport::single("commutative", commutativity_verdict(a))
}

/// Commutativity followed by the Hom-Jordan identity.
pub fn check_hom_jordan<F: Field>(a: &HomAlgebra<F>, opts: CheckOptions) -> VerificationReport<F> {
    let mut r = check_commutative(a);
    let v = if r.holds() {
        check_identity(a, Identity::HomJordan, opts)
    } else {
        Verdict::Undecidable("product is not commutative".into())
    };
    r.push("hom_jordan", v);
    r
}

/// The Jordan identity; needs `α = id`.
pub fn check_jordan<F: Field>(
    a: &HomAlgebra<F>,
    opts: CheckOptions,
) -> Result<VerificationReport<F>> {
    if !a.is_jordan_mode() && !a.alpha().is_identity() {
        return Err(Error::PreconditionFailed(
            "the Jordan identity is checked on algebras with identity twist".into(),
        ));
    }
    Ok(VerificationReport::single(
        "jordan",
        check_identity(a, Identity::Jordan, opts),
    ))
}

pub fn check_multiplicative<F: Field>(a: &HomAlgebra<F>) -> VerificationReport<F> {
    let n = a.dim();
    for i in 0..n {
        for j in i..n {
            let (x, y) = (a.basis_vector(i), a.basis_vector(j));
            let lhs = a.apply_alpha(&a.mul(&x, &y));
            let rhs = a.mul(&a.apply_alpha(&x), &a.apply_alpha(&y));
            if lhs != rhs {
                return VerificationReport::single(
                    "multiplicative",
                    Verdict::Fails(Witness::new(vec![("x", x), ("y", y)], lhs, rhs)),
                );
            }
        }
    }
    VerificationReport::single("multiplicative", Verdict::Holds)
}

fn check_map_shape<F: Field>(phi: &Matrix<F>, a: &HomAlgebra<F>, b: &HomAlgebra<F>) -> Result<()> {
    if phi.cols() != a.dim() || phi.rows() != b.dim() {
        return Err(Error::DimensionMismatch(format!(
            "map is {}x{}, algebras have dimensions {} and {}",
            phi.rows(),
            phi.cols(),
            a.dim(),
            b.dim()
        )));
    }
    Ok(())
}

fn product_verdict<F: Field>(phi: &Matrix<F>, a: &HomAlgebra<F>, b: &HomAlgebra<F>) -> Verdict<F> {
    let n = a.dim();
    for i in 0..n {
        for j in i..n {
            let (x, y) = (a.basis_vector(i), a.basis_vector(j));
            let lhs = phi.mul_vec(&a.mul(&x, &y));
            let rhs = b.mul(&phi.mul_vec(&x), &phi.mul_vec(&y));
            if lhs != rhs {
                return Verdict::Fails(Witness::new(vec![("x", x), ("y", y)], lhs, rhs));
            }
        }
    }
    Verdict::Holds
}

fn twist_verdict<F: Field>(phi: &Matrix<F>, a: &HomAlgebra<F>, b: &HomAlgebra<F>) -> Verdict<F> {
    for i in 0..a.dim() {
        let x = a.basis_vector(i);
        let lhs = phi.mul_vec(&a.apply_alpha(&x));
        let rhs = b.apply_alpha(&phi.mul_vec(&x));
        if lhs != rhs {
            return Verdict::Fails(Witness::new(vec![("x", x)], lhs, rhs));
        }
    }
    Verdict::Holds
}

fn invertible_verdict<F: Field>(phi: &Matrix<F>) -> Verdict<F> {
    if !phi.is_square() {
        return Verdict::Fails(Witness::note(format!(
            "map is {}x{} and cannot be invertible",
            phi.rows(),
            phi.cols()
        )));
    }
    match phi.kernel().basis_vectors().into_iter().next() {
        None => Verdict::Holds,
        Some(v) => {
            let img = phi.mul_vec(&v);
            let mut w = Witness::new(vec![("x", v.clone())], v, img);
            w.note = Some("nonzero vector in the kernel".into());
            Verdict::Fails(w)
        }
    }
}

/// `φ(μ(x,y)) = μ'(φx, φy)` and `φ∘α = β∘φ`.
pub fn check_homomorphism<F: Field>(
    phi: &Matrix<F>,
    a: &HomAlgebra<F>,
    b: &HomAlgebra<F>,
) -> Result<VerificationReport<F>> {
    check_map_shape(phi, a, b)?;
    let mut r = VerificationReport::single("preserves_product", product_verdict(phi, a, b));
    r.push("intertwines_twist", twist_verdict(phi, a, b));
    Ok(r)
}

pub fn check_isomorphism<F: Field>(
    phi: &Matrix<F>,
    a: &HomAlgebra<F>,
    b: &HomAlgebra<F>,
) -> Result<VerificationReport<F>> {
    let mut r = check_homomorphism(phi, a, b)?;
    r.push("invertible", invertible_verdict(phi));
    Ok(r)
}

/// Decides "φ is a Hom-isomorphism" directly and through the induced Jordan
/// algebras (`φ` an induced isomorphism with `β∘φ = φ∘α`), and checks that the
/// two verdicts agree.
pub fn check_hom_isomorphism_via_induced<F: Field>(
    phi: &Matrix<F>,
    a: &HomAlgebra<F>,
    b: &HomAlgebra<F>,
) -> Result<VerificationReport<F>> {
    check_map_shape(phi, a, b)?;
    let ia = HomAlgebra::jordan(a.induced_tensor()?)?;
    let ib = HomAlgebra::jordan(b.induced_tensor()?)?;

    let direct = check_isomorphism(phi, a, b)?;
    let mut via = check_isomorphism(phi, &ia, &ib)?;
    via.push("intertwines_twist", twist_verdict(phi, a, b));

    let summarize = |r: &VerificationReport<F>| -> Verdict<F> {
        r.checks
            .iter()
            .find_map(|c| match &c.verdict {
                Verdict::Holds => None,
                v => {
                    let mut v = v.clone();
                    if let Verdict::Fails(w) = &mut v {
                        w.note = Some(format!("{} fails", c.name));
                    }
                    Some(v)
                }
            })
            .unwrap_or(Verdict::Holds)
    };
    let (d, i) = (summarize(&direct), summarize(&via));
    let agreement = if d.outcome() == i.outcome() {
        Verdict::Holds
    } else {
        Verdict::Fails(Witness::note(format!(
            "direct verdict {} but induced verdict {}",
            d.outcome(),
            i.outcome()
        )))
    };
    let mut r = VerificationReport::single("hom_isomorphism", d);
    r.push("induced_isomorphism", i);
    r.push("agreement", agreement);
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra_core::StructureTensor;
    use crate::field::{Fp, Rational};

    type Q = Rational;

    fn ex44<F: Field>() -> HomAlgebra<F> {
        let mu =
            StructureTensor::from_entries(2, &[(0, 0, 1, F::one()), (1, 1, 0, F::one())]).unwrap();
        HomAlgebra::new(mu, Matrix::from_i64(&[&[0, 1], &[1, 0]])).unwrap()
    }

    fn dim1(k: i64) -> HomAlgebra<Q> {
        let mu = StructureTensor::from_entries(1, &[(0, 0, 0, Q::from_i64(1))]).unwrap();
        HomAlgebra::new(mu, Matrix::from_i64(&[&[k]])).unwrap()
    }

    #[test]
    fn example_algebra_is_hom_jordan_and_multiplicative() {
        assert!(check_hom_jordan(&ex44::<Q>(), CheckOptions::default()).holds());
        assert!(check_multiplicative(&ex44::<Q>()).holds());
        assert!(check_hom_jordan(&ex44::<Fp<2>>(), CheckOptions::default()).holds());
        assert!(check_hom_jordan(&ex44::<Fp<3>>(), CheckOptions::default()).holds());
    }

    #[test]
    fn zero_product_holds_for_any_twist() {
        let a = HomAlgebra::<Q>::zero(3, Matrix::from_i64(&[&[1, 2, 0], &[0, 0, 5], &[3, 0, 1]]))
            .unwrap();
        assert!(check_hom_jordan(&a, CheckOptions::default()).holds());
    }

    #[test]
    fn multiplicative_iff_idempotent_scale() {
        for k in -2..=3 {
            assert_eq!(
                check_multiplicative(&dim1(k)).holds(),
                k * k == k,
                "k = {k}"
            );
        }
    }

    #[test]
    fn polarization_refuses_small_characteristic() {
        let v = check_identity(
            &ex44::<Fp<3>>(),
            Identity::HomJordan,
            CheckOptions::with_strategy(Strategy::Polarized),
        );
        assert!(matches!(v, Verdict::Undecidable(_)));
    }

    #[test]
    fn budget_makes_enumeration_undecidable() {
        let a = HomAlgebra::<Fp<2>>::zero(20, Matrix::identity(20)).unwrap();
        let v = check_identity(&a, Identity::HomJordan, CheckOptions::default());
        assert!(matches!(v, Verdict::Undecidable(_)));
    }

    #[test]
    fn cyclic_table_fails_jordan_with_reproducible_witness() {
        // a_i a_{i+1} = a_{i+2} on Z/3, identity twist
        let q1 = Q::from_i64(1);
        let mu = StructureTensor::from_entries(
            3,
            &[(0, 1, 2, q1.clone()), (1, 2, 0, q1.clone()), (2, 0, 1, q1)],
        )
        .unwrap();
        let a = HomAlgebra::jordan(mu).unwrap();
        let r = check_jordan(&a, CheckOptions::default()).unwrap();
        let w = r.get("jordan").unwrap().witness().expect("fails");
        let (l, r) = Identity::Jordan.evaluate(&a, w.input("x").unwrap(), w.input("y").unwrap());
        assert_ne!(l, r);
        assert_eq!((l, r), (w.lhs.clone(), w.rhs.clone()));
    }

    #[test]
    fn isomorphism_checks_agree_on_example() {
        let a = ex44::<Q>();
        let id = Matrix::identity(2);
        let r = check_hom_isomorphism_via_induced(&id, &a, &a).unwrap();
        assert!(r.holds());
        let r = check_hom_isomorphism_via_induced(a.alpha(), &a, &a).unwrap();
        assert!(r.holds());
        let d = Matrix::diagonal(&[Q::from_i64(1), Q::from_i64(2)]);
        let r = check_hom_isomorphism_via_induced(&d, &a, &a).unwrap();
        assert!(r.get("hom_isomorphism").unwrap().fails());
        assert!(r.get("induced_isomorphism").unwrap().fails());
        assert!(r.get("agreement").unwrap().holds());
    }

    #[test]
    fn zero_map_is_homomorphism_not_isomorphism() {
        let a = ex44::<Q>();
        let z = Matrix::zeros(2, 2);
        assert!(check_homomorphism(&z, &a, &a).unwrap().holds());
        let r = check_isomorphism(&z, &a, &a).unwrap();
        assert!(r.get("invertible").unwrap().fails());
    }

    #[test]
    fn jordan_check_needs_identity_twist() {
        assert!(matches!(
            check_jordan(&ex44::<Q>(), CheckOptions::default()),
            Err(Error::PreconditionFailed(_))
        ));
    }
}
