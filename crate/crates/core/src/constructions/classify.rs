use crate::algebra_core::{check_isomorphism, check_multiplicative, HomAlgebra, StructureTensor};
use crate::error::{Error, Result};
use crate::exactla::{enumerate, vector, Matrix, SimilarityInvariant, Subspace};
use crate::field::Field;
use crate::structure::{
    alpha_orbits, induced_algebra, is_jordan_ideal, is_simple, restrict_product, sort_ideals,
    SearchOptions, Simplicity,
};

/// `(X, n, A₁)`: a simple ideal of the induced algebra, the length of its
/// `α`-orbit, and `αⁿ` restricted to it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationSignature<F> {
    /// Basis of the chosen simple ideal `V₁`, in ambient coordinates.
    pub ideal_basis: Vec<Vec<F>>,
    /// Induced product restricted to `V₁` in that basis.
    pub ideal_tensor: StructureTensor<F>,
    pub n: usize,
    pub a1: Matrix<F>,
    pub a1_invariants: SimilarityInvariant<F>,
    pub total_dim: usize,
}

impl<F: Field> ClassificationSignature<F> {
    pub fn ideal_dim(&self) -> usize {
        self.ideal_basis.len()
    }
}

/// Minimal nonzero ideals of `(V, μ)` by enumerating every subspace.
fn minimal_ideals_exhaustive<F: Field>(
    j: &HomAlgebra<F>,
    budget: u128,
) -> Result<Vec<Subspace<F>>> {
    let ideals: Vec<Subspace<F>> = enumerate::all_subspaces::<F>(j.dim(), budget)?
        .into_iter()
        .filter(|w| !w.is_zero() && is_jordan_ideal(j, w))
        .collect();
    let mut minimal: Vec<Subspace<F>> = ideals
        .iter()
        .filter(|w| {
            !ideals
                .iter()
                .any(|u| u.dim() < w.dim() && w.contains_subspace(u))
        })
        .cloned()
        .collect();
    sort_ideals(&mut minimal);
    Ok(minimal)
}

/// The simple ideals of the induced algebra of a simple algebra.
fn induced_simple_ideals<F: Field>(
    a: &HomAlgebra<F>,
    opts: &SearchOptions,
) -> Result<(HomAlgebra<F>, Vec<Subspace<F>>)> {
    if !check_multiplicative(a).holds() {
        return Err(Error::NotMultiplicative);
    }
    let verdict = is_simple(a, opts)?;
    let decomposition = match verdict {
        Simplicity::Simple { decomposition, .. } => decomposition,
        Simplicity::NotSimple { reason, .. } => return Err(Error::NotSimple(reason)),
        Simplicity::Unsupported(reason) => return Err(Error::Unsupported(reason)),
    };
    if a.dim() == 1 && !a.alpha_invertible() {
        return Err(Error::NotJordanType);
    }
    let induced = induced_algebra(a)?;
    let ideals = match decomposition {
        Some(d) => d.ideals,
        None if F::characteristic() == 0 => vec![Subspace::full(a.dim())],
        None => minimal_ideals_exhaustive(&induced, opts.budget)?,
    };
    Ok((induced, ideals))
}

/// Signature of a simple multiplicative algebra. Over a finite field the simple
/// ideals of the induced algebra are found by exhaustive enumeration.
pub fn classification_signature<F: Field>(
    a: &HomAlgebra<F>,
    opts: &SearchOptions,
) -> Result<ClassificationSignature<F>> {
    let (induced, ideals) = induced_simple_ideals(a, opts)?;
    let n_total = a.dim();
    let refs: Vec<&Subspace<F>> = ideals.iter().collect();
    let total: usize = ideals.iter().map(Subspace::dim).sum();
    if total != n_total || !crate::structure::sum_of(n_total, &refs).is_full() {
        return Err(Error::NotSimple(
            "simple ideals of the induced algebra do not decompose V".into(),
        ));
    }
    let orbits = alpha_orbits(&ideals, a.alpha())?;
    if orbits.len() != 1 {
        return Err(Error::NotSimple(format!(
            "α has {} orbits on the simple ideals of the induced algebra",
            orbits.len()
        )));
    }
    let n = orbits[0].len();
    let v1 = &ideals[orbits[0][0]];
    let a1 = v1
        .restrict(&a.alpha().pow(n))
        .map_err(|_| Error::CertificationFailed("αⁿ does not preserve the simple ideal".into()))?;
    let ideal_tensor = restrict_product(induced.mu(), v1)?.mu().clone();
    Ok(ClassificationSignature {
        ideal_basis: v1.basis_vectors(),
        ideal_tensor,
        n,
        a1_invariants: SimilarityInvariant::of(&a1),
        a1,
        total_dim: n_total,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SignatureComparison {
    Distinct(String),
    PossiblyIsomorphic,
}

/// Necessary conditions for isomorphism: equal dimensions, orbit lengths and
/// similarity class of `A₁`.
pub fn compare_signatures<F: Field>(
    s: &ClassificationSignature<F>,
    t: &ClassificationSignature<F>,
) -> SignatureComparison {
    if s.total_dim != t.total_dim {
        return SignatureComparison::Distinct(format!(
            "total_dim {} vs {}",
            s.total_dim, t.total_dim
        ));
    }
    if s.ideal_dim() != t.ideal_dim() {
        return SignatureComparison::Distinct(format!(
            "ideal_dim {} vs {}",
            s.ideal_dim(),
            t.ideal_dim()
        ));
    }
    if s.n != t.n {
        return SignatureComparison::Distinct(format!("orbit_length {} vs {}", s.n, t.n));
    }
    if s.a1_invariants != t.a1_invariants {
        return SignatureComparison::Distinct("similarity: A₁ and B₁ are not similar".into());
    }
    SignatureComparison::PossiblyIsomorphic
}

/// Extends an isomorphism `m1 : V₁ → W₁` of the chosen simple ideals with
/// `m1·A₁ = B₁·m1` to `φ(αⁱx) = βⁱ(m1 x)`.
pub fn lift_ideal_isomorphism<F: Field>(
    m1: &Matrix<F>,
    a: &HomAlgebra<F>,
    b: &HomAlgebra<F>,
    opts: &SearchOptions,
) -> Result<Matrix<F>> {
    let sa = classification_signature(a, opts)?;
    let sb = classification_signature(b, opts)?;
    lift_with_signatures(m1, a, b, &sa, &sb)
}

fn ideal_iso_ok<F: Field>(
    m1: &Matrix<F>,
    sa: &ClassificationSignature<F>,
    sb: &ClassificationSignature<F>,
) -> bool {
    let (Ok(xa), Ok(xb)) = (
        HomAlgebra::jordan(sa.ideal_tensor.clone()),
        HomAlgebra::jordan(sb.ideal_tensor.clone()),
    ) else {
        return false;
    };
    check_isomorphism(m1, &xa, &xb).is_ok_and(|r| r.holds())
}

fn lift_with_signatures<F: Field>(
    m1: &Matrix<F>,
    a: &HomAlgebra<F>,
    b: &HomAlgebra<F>,
    sa: &ClassificationSignature<F>,
    sb: &ClassificationSignature<F>,
) -> Result<Matrix<F>> {
    let m = sa.ideal_dim();
    if sa.total_dim != sb.total_dim
        || sa.n != sb.n
        || m != sb.ideal_dim()
        || m1.rows() != m
        || m1.cols() != m
    {
        return Err(Error::NotIdealIso);
    }
    if !ideal_iso_ok(m1, sa, sb) {
        return Err(Error::NotIdealIso);
    }
    if m1 * &sa.a1 != &sb.a1 * m1 {
        return Err(Error::IntertwiningFailed);
    }
    let phi = assemble_lift(m1, a, b, sa, sb)?;
    let report = check_isomorphism(&phi, a, b)?;
    if !report.holds() {
        return Err(Error::CertificationFailed(
            "lifted map is not an isomorphism".into(),
        ));
    }
    Ok(phi)
}

fn assemble_lift<F: Field>(
    m1: &Matrix<F>,
    a: &HomAlgebra<F>,
    b: &HomAlgebra<F>,
    sa: &ClassificationSignature<F>,
    sb: &ClassificationSignature<F>,
) -> Result<Matrix<F>> {
    let total = sa.total_dim;
    let mut src = Vec::with_capacity(total);
    let mut dst = Vec::with_capacity(total);
    let mut pa = Matrix::identity(total);
    let mut pb = Matrix::identity(total);
    for _ in 0..sa.n {
        for (k, x) in sa.ideal_basis.iter().enumerate() {
            src.push(pa.mul_vec(x));
            let y = vector::combine(total, &m1.column(k), &sb.ideal_basis);
            dst.push(pb.mul_vec(&y));
        }
        pa = &pa * a.alpha();
        pb = &pb * b.alpha();
    }
    let p = Matrix::from_columns(&src, total)?;
    let q = Matrix::from_columns(&dst, total)?;
    let pinv = p.inverse().map_err(|_| {
        Error::CertificationFailed("orbit of the simple ideal does not span V".into())
    })?;
    Ok(&q * &pinv)
}

/// Exhaustive search over maps `V₁ → W₁`, lifting the first one that passes.
/// Finite fields only; returns `None` when no isomorphism exists.
pub fn iso_search_smallfield<F: Field>(
    a: &HomAlgebra<F>,
    b: &HomAlgebra<F>,
    opts: &SearchOptions,
) -> Result<Option<Matrix<F>>> {
    if F::characteristic() == 0 {
        return Err(Error::UnsupportedCharacteristic(0));
    }
    if a.dim() != b.dim() {
        return Ok(None);
    }
    let sa = classification_signature(a, opts)?;
    let sb = classification_signature(b, opts)?;
    if sa.n != sb.n || sa.ideal_dim() != sb.ideal_dim() {
        return Ok(None);
    }
    let m = sa.ideal_dim();
    for entries in enumerate::all_vectors::<F>(m * m, opts.budget)? {
        let m1 = Matrix::from_fn(m, m, |r, c| entries[r * m + c].clone());
        if !m1.is_invertible() || &m1 * &sa.a1 != &sb.a1 * &m1 || !ideal_iso_ok(&m1, &sa, &sb) {
            continue;
        }
        match lift_with_signatures(&m1, a, b, &sa, &sb) {
            Ok(phi) => return Ok(Some(phi)),
            Err(Error::CertificationFailed(msg)) => return Err(Error::CertificationFailed(msg)),
            Err(_) => continue,
        }
    }
    Ok(None)
}
