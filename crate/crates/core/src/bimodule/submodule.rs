use super::check::check_equivariance;
use super::rep::{BimoduleRep, JordanModuleRep};
use crate::algebra_core::{check_multiplicative, Verdict, VerificationReport, Witness};
use crate::constructions::{coset_coordinates, standard_complement};
use crate::error::{Error, Result};
use crate::exactla::{enumerate, vector, Matrix, Subspace};
use crate::field::Field;
use crate::structure::{is_simple, SearchOptions};

/// Smallest subspace containing `gens` and invariant under every map in `ops`.
pub fn invariant_closure<F: Field>(
    m: usize,
    ops: &[Matrix<F>],
    gens: Vec<Vec<F>>,
) -> Result<Subspace<F>> {
    let mut w = Subspace::span(m, gens)?;
    loop {
        let mut vs = w.basis_vectors();
        for x in w.basis_vectors() {
            vs.extend(ops.iter().map(|op| op.mul_vec(&x)));
        }
        let next = Subspace::span(m, vs)?;
        if next.dim() == w.dim() {
            return Ok(w);
        }
        w = next;
    }
}

fn bimodule_ops<F: Field>(r: &BimoduleRep<F>) -> Vec<Matrix<F>> {
    let mut ops = r.lambda().to_vec();
    ops.push(r.alpha_w().clone());
    ops
}

pub fn submodule_closure<F: Field>(r: &BimoduleRep<F>, gens: Vec<Vec<F>>) -> Result<Subspace<F>> {
    invariant_closure(r.dim(), &bimodule_ops(r), gens)
}

pub fn is_submodule<F: Field>(r: &BimoduleRep<F>, u: &Subspace<F>) -> bool {
    u.ambient_dim() == r.dim() && bimodule_ops(r).iter().all(|op| u.is_invariant_under(op))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Irreducibility<F> {
    Irreducible,
    Reducible(Subspace<F>),
    /// No proper submodule was found by random search.
    ProbablyIrreducible,
}

impl<F> Irreducibility<F> {
    pub fn label(&self) -> &'static str {
        match self {
            Irreducibility::Irreducible => "irreducible",
            Irreducibility::Reducible(_) => "reducible",
            Irreducibility::ProbablyIrreducible => "probably_irreducible",
        }
    }

    /// Irreducible or probably so.
    pub fn is_irreducible_like(&self) -> bool {
        !matches!(self, Irreducibility::Reducible(_))
    }
}

/// Over a finite field within budget, closes every line (definite answer);
/// otherwise closes `trials` random vectors.
pub fn irreducibility_of<F: Field>(
    m: usize,
    ops: &[Matrix<F>],
    opts: &SearchOptions,
) -> Result<Irreducibility<F>> {
    if m == 0 {
        return Err(Error::PreconditionFailed(
            "the zero module has a single submodule".into(),
        ));
    }
    let exhaustive = if F::characteristic() == 0 {
        None
    } else {
        match enumerate::projective_points::<F>(m, opts.budget) {
            Ok(points) => Some(points),
            Err(Error::BudgetExceeded { .. }) => None,
            Err(e) => return Err(e),
        }
    };
    if let Some(points) = exhaustive {
        for x in points {
            let c = invariant_closure(m, ops, vec![x])?;
            if !c.is_full() {
                return Ok(Irreducibility::Reducible(c));
            }
        }
        return Ok(Irreducibility::Irreducible);
    }
    let mut rng = opts.rng();
    for _ in 0..opts.trials {
        let x: Vec<F> = vector::random(m, &mut rng);
        if vector::is_zero(&x) {
            continue;
        }
        let c = invariant_closure(m, ops, vec![x])?;
        if !c.is_full() {
            return Ok(Irreducibility::Reducible(c));
        }
    }
    Ok(Irreducibility::ProbablyIrreducible)
}

pub fn is_irreducible<F: Field>(
    r: &BimoduleRep<F>,
    opts: &SearchOptions,
) -> Result<Irreducibility<F>> {
    irreducibility_of(r.dim(), &bimodule_ops(r), opts)
}

pub fn is_irreducible_module<F: Field>(
    r: &JordanModuleRep<F>,
    opts: &SearchOptions,
) -> Result<Irreducibility<F>> {
    irreducibility_of(r.dim(), r.lambda_prime(), opts)
}

/// `Ker α_W`, `Im α_W` and the map `w + Ker α_W ↦ α_W(w)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelImageAnalysis<F> {
    pub kernel: Subspace<F>,
    pub image: Subspace<F>,
    /// Matrix of the induced map from `W/Ker α_W` (standard complement basis)
    /// to `Im α_W` (RREF basis).
    pub induced_map: Matrix<F>,
    /// `kernel_submodule`, `image_submodule`, `bijective`, `intertwines_action`
    /// (`f(a · w̄) = α(a) · f(w̄)`), `intertwines_twist`.
    pub report: VerificationReport<F>,
    /// Whether `f(a · w̄) = a · f(w̄)` also holds; recorded, not required.
    pub untwisted_intertwining: bool,
}

fn flag<F>(ok: bool, msg: &str) -> Verdict<F> {
    if ok {
        Verdict::Holds
    } else {
        Verdict::Fails(Witness::note(msg))
    }
}

pub fn kernel_image_analysis<F: Field>(r: &BimoduleRep<F>) -> Result<KernelImageAnalysis<F>> {
    if !check_equivariance(r).holds() {
        return Err(Error::EquivarianceFailed);
    }
    let alg = r.algebra();
    let aw = r.alpha_w();
    let kernel = aw.kernel();
    let image = aw.image();
    let mut report = VerificationReport::single(
        "kernel_submodule",
        flag(is_submodule(r, &kernel), "Ker α_W is not a submodule"),
    );
    report.push(
        "image_submodule",
        flag(is_submodule(r, &image), "Im α_W is not a submodule"),
    );

    let reps = standard_complement(&kernel);
    let p = coset_coordinates(&kernel, &reps)?;
    let cols: Vec<Vec<F>> = reps
        .iter()
        .map(|w| {
            image
                .coordinates(&aw.mul_vec(w))
                .expect("α_W(w) lies in the image")
        })
        .collect();
    let f = Matrix::from_columns(&cols, image.dim())?;
    report.push(
        "bijective",
        flag(
            f.is_square() && f.is_invertible(),
            "induced map is not bijective",
        ),
    );

    // Quotient and image actions in their bases.
    let quotient_op = |op: &Matrix<F>| -> Result<Matrix<F>> {
        let cols: Vec<Vec<F>> = reps.iter().map(|w| p.mul_vec(&op.mul_vec(w))).collect();
        Matrix::from_columns(&cols, reps.len())
    };
    let mut twisted = true;
    let mut plain = true;
    for i in 0..alg.dim() {
        let e = alg.basis_vector(i);
        let q = quotient_op(&r.action(&e))?;
        let on_image_twisted = image.restrict(&r.action(&alg.apply_alpha(&e)));
        let on_image_plain = image.restrict(&r.action(&e));
        let left = &f * &q;
        twisted &= on_image_twisted.is_ok_and(|m| left == &m * &f);
        plain &= on_image_plain.is_ok_and(|m| left == &m * &f);
    }
    report.push(
        "intertwines_action",
        flag(twisted, "f(a · w) ≠ α(a) · f(w)"),
    );
    let qa = quotient_op(aw)?;
    let ia = image.restrict(aw);
    report.push(
        "intertwines_twist",
        flag(ia.is_ok_and(|m| &f * &qa == &m * &f), "f ∘ α_W ≠ α_W ∘ f"),
    );
    Ok(KernelImageAnalysis {
        kernel,
        image,
        induced_map: f,
        report,
        untwisted_intertwining: plain,
    })
}

/// Irreducibility of a bimodule and of its transported Jordan module, with
/// the two implications drawn from them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrreducibilityTransfer<F> {
    pub bimodule: Irreducibility<F>,
    /// `None` when `α_W` is singular and no transport exists.
    pub module: Option<Irreducibility<F>>,
    pub alpha_w_invertible: bool,
    /// `module_irreducible_implies_bimodule_irreducible`,
    /// `irreducible_implies_invertible_twist`.
    pub report: VerificationReport<F>,
}

pub fn irreducibility_transfer_check<F: Field>(
    r: &BimoduleRep<F>,
    opts: &SearchOptions,
) -> Result<IrreducibilityTransfer<F>> {
    let alg = r.algebra();
    if !check_multiplicative(alg).holds() {
        return Err(Error::NotMultiplicative);
    }
    if !is_simple(alg, opts)?.is_simple() {
        return Err(Error::PreconditionFailed("algebra is not simple".into()));
    }
    if !check_equivariance(r).holds() {
        return Err(Error::EquivarianceFailed);
    }
    let bimodule = is_irreducible(r, opts)?;
    let alpha_w_invertible = r.alpha_w().is_invertible();
    let module = if alpha_w_invertible {
        let m = super::transport::bimodule_to_module(r)?;
        Some(is_irreducible_module(&m, opts)?)
    } else {
        None
    };

    let implication = match (&module, &bimodule) {
        (Some(Irreducibility::Irreducible), Irreducibility::Reducible(w)) => {
            let mut wit = Witness::new(
                vec![("w", w.basis_vectors().remove(0))],
                Vec::new(),
                Vec::new(),
            );
            wit.note = Some(format!("proper submodule of dimension {}", w.dim()));
            Verdict::Fails(wit)
        }
        (Some(Irreducibility::ProbablyIrreducible), Irreducibility::Reducible(_)) => {
            Verdict::Undecidable("module irreducibility is only probable".into())
        }
        _ => Verdict::Holds,
    };
    let invertibility = match (&bimodule, alpha_w_invertible) {
        (Irreducibility::Irreducible, false) => {
            let k = r.alpha_w().kernel().basis_vectors().remove(0);
            let mut w = Witness::new(
                vec![("w", k.clone())],
                r.alpha_w().mul_vec(&k),
                vector::zeros(0),
            );
            w.note = Some("irreducible bimodule with singular α_W".into());
            Verdict::Fails(w)
        }
        (Irreducibility::ProbablyIrreducible, false) => {
            Verdict::Undecidable("bimodule irreducibility is only probable".into())
        }
        _ => Verdict::Holds,
    };
    let mut report = VerificationReport::single(
        "module_irreducible_implies_bimodule_irreducible",
        implication,
    );
    report.push("irreducible_implies_invertible_twist", invertibility);
    Ok(IrreducibilityTransfer {
        bimodule,
        module,
        alpha_w_invertible,
        report,
    })
}
