use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::ideals::{is_jordan_ideal, restrict_product, subspace_product};
use crate::algebra_core::HomAlgebra;
use crate::error::{Error, Result};
use crate::exactla::{vector, Matrix, SimilarityInvariant, Subspace};
use crate::field::Field;

/// Randomized-search settings shared by the decision procedures.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub seed: u64,
    pub trials: usize,
    pub budget: u128,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            seed: 0,
            trials: 64,
            budget: crate::exactla::enumerate::DEFAULT_BUDGET,
        }
    }
}

impl SearchOptions {
    pub fn with_seed(seed: u64) -> Self {
        SearchOptions {
            seed,
            ..Self::default()
        }
    }

    pub fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

/// A decomposition into ideals together with the permutation induced by `α`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionResult<F> {
    pub ideals: Vec<Subspace<F>>,
    /// False when some piece was declared simple without a centroid proof.
    pub certified: bool,
    pub orbit_partition: Vec<Vec<usize>>,
    pub transitive: bool,
}

fn require_char_zero<F: Field>() -> Result<()> {
    match F::characteristic() {
        0 => Ok(()),
        p => Err(Error::UnsupportedCharacteristic(p)),
    }
}

/// `G[i][j] = tr L_{μ(e_i, e_j)}`.
pub fn trace_form_gram<F: Field>(j: &HomAlgebra<F>) -> Result<Matrix<F>> {
    require_char_zero::<F>()?;
    let n = j.dim();
    let traces: Vec<F> = (0..n).map(|k| j.left_mult_operator(k).trace()).collect();
    Ok(Matrix::from_fn(n, n, |r, c| {
        vector::dot(&j.mu().basis_product(r, c), &traces)
    }))
}

/// Kernel of the trace form.
pub fn radical<F: Field>(j: &HomAlgebra<F>) -> Result<Subspace<F>> {
    Ok(trace_form_gram(j)?.kernel())
}

/// Basis of `{T : T L_x = L_x T for all x}`, as matrices.
pub fn centroid<F: Field>(j: &HomAlgebra<F>) -> Vec<Matrix<F>> {
    let d = j.dim();
    let ls: Vec<Matrix<F>> = (0..d).map(|a| j.left_mult_operator(a)).collect();
    let var = |r: usize, c: usize| r * d + c;
    let mut rows = Vec::with_capacity(d * d * d);
    for l in &ls {
        for r in 0..d {
            for c in 0..d {
                // (T L)[r][c] - (L T)[r][c]
                let mut row = vector::zeros::<F>(d * d);
                for k in 0..d {
                    let v = row[var(r, k)].clone() + l.get(k, c).clone();
                    row[var(r, k)] = v;
                    let v = row[var(k, c)].clone() - l.get(r, k).clone();
                    row[var(k, c)] = v;
                }
                if !vector::is_zero(&row) {
                    rows.push(row);
                }
            }
        }
    }
    let system = Matrix::from_rows(rows, d * d).expect("rows have d^2 entries");
    system
        .kernel()
        .basis_vectors()
        .into_iter()
        .map(|t| Matrix::from_fn(d, d, |r, c| t[var(r, c)].clone()))
        .collect()
}

enum Split<F> {
    Pieces(Subspace<F>, Subspace<F>),
    Simple { certified: bool },
}

/// Splits a semisimple algebra by an eigenspace of a random centroid element.
///
/// A piece is simple iff its centroid is a field; this is certified when a
/// random element generates the centroid and has an irreducible minimal
/// polynomial of degree at most 3.
fn split_piece<F: Field>(j: &HomAlgebra<F>, rng: &mut ChaCha8Rng, trials: usize) -> Split<F> {
    let d = j.dim();
    let gamma = centroid(j);
    if gamma.len() <= 1 {
        return Split::Simple { certified: true };
    }
    for _ in 0..trials {
        let coeffs: Vec<F> = vector::random(gamma.len(), rng);
        if vector::is_zero(&coeffs) {
            continue;
        }
        let c = gamma
            .iter()
            .zip(&coeffs)
            .fold(Matrix::zeros(d, d), |acc, (g, k)| &acc + &g.scale(k));
        let minpoly = SimilarityInvariant::of(&c).minimal_polynomial();
        let Some(roots) = minpoly.roots() else {
            continue;
        };
        let deg = minpoly.degree().unwrap_or(0);
        if deg == gamma.len() && (deg == 1 || (deg <= 3 && roots.is_empty())) {
            // The centroid is the field F[c].
            return Split::Simple { certified: true };
        }
        for lambda in roots {
            let shifted = &c - &Matrix::identity(d).scale(&lambda);
            let k = shifted.kernel();
            if k.dim() > 0 && k.dim() < d {
                return Split::Pieces(k, shifted.image());
            }
        }
    }
    Split::Simple { certified: false }
}

fn lift<F: Field>(outer: &Subspace<F>, inner: &Subspace<F>) -> Subspace<F> {
    let basis = outer.basis_vectors();
    let n = outer.ambient_dim();
    let vs = inner
        .basis_vectors()
        .iter()
        .map(|coords| vector::combine(n, coords, &basis))
        .collect();
    Subspace::span(n, vs).expect("lifted vectors have ambient length")
}

fn ideal_order<F: Field>(s: &Subspace<F>) -> (Vec<usize>, String) {
    (s.pivots().to_vec(), format!("{}", s.basis()))
}

/// Sorts ideals into a canonical order (pivot pattern, then entries).
pub fn sort_ideals<F: Field>(ideals: &mut [Subspace<F>]) {
    ideals.sort_by_cached_key(ideal_order);
}

/// Groups ideal indices into orbits of `alpha`, which must permute the ideals.
pub fn alpha_orbits<F: Field>(
    ideals: &[Subspace<F>],
    alpha: &Matrix<F>,
) -> Result<Vec<Vec<usize>>> {
    let mut image = Vec::with_capacity(ideals.len());
    for s in ideals {
        let img = s.image_under(alpha)?;
        let target = ideals.iter().position(|t| *t == img).ok_or_else(|| {
            Error::CertificationFailed("twist map does not permute the ideals".into())
        })?;
        image.push(target);
    }
    let mut seen = vec![false; ideals.len()];
    let mut orbits = Vec::new();
    for start in 0..ideals.len() {
        if seen[start] {
            continue;
        }
        let mut orbit = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            orbit.push(i);
            i = image[i];
        }
        orbits.push(orbit);
    }
    Ok(orbits)
}

/// Sum of the listed ideals.
pub fn sum_of<F: Field>(n: usize, ideals: &[&Subspace<F>]) -> Subspace<F> {
    ideals.iter().fold(Subspace::zero(n), |acc, s| {
        acc.sum(s).expect("same ambient dimension")
    })
}

fn certify<F: Field>(j: &HomAlgebra<F>, ideals: &[Subspace<F>]) -> Result<()> {
    let n = j.dim();
    let total: usize = ideals.iter().map(Subspace::dim).sum();
    let refs: Vec<&Subspace<F>> = ideals.iter().collect();
    if total != n || !sum_of(n, &refs).is_full() {
        return Err(Error::CertificationFailed(
            "pieces do not form a direct sum equal to V".into(),
        ));
    }
    for (i, p) in ideals.iter().enumerate() {
        if p.is_zero() || !is_jordan_ideal(j, p) {
            return Err(Error::CertificationFailed(format!(
                "piece {i} is not a nonzero ideal"
            )));
        }
        for q in &ideals[i + 1..] {
            if !subspace_product(j, p, q)?.is_zero() {
                return Err(Error::CertificationFailed(
                    "pieces do not annihilate each other".into(),
                ));
            }
        }
    }
    Ok(())
}

/// Splits a radical-free algebra (product `μ` only) into simple ideals.
///
/// A piece is split along an eigenspace of a random element of its centroid.
/// A piece whose centroid is one-dimensional is simple; a piece that resists
/// `trials` attempts is declared simple without certification.
pub fn decompose_semisimple<F: Field>(
    j: &HomAlgebra<F>,
    opts: &SearchOptions,
) -> Result<DecompositionResult<F>> {
    let rad = radical(j)?;
    if !rad.is_zero() {
        return Err(Error::RadicalNonzero(rad.dim()));
    }
    let n = j.dim();
    let mut rng = opts.rng();
    let mut pending = vec![Subspace::full(n)];
    let mut leaves = Vec::new();
    let mut certified = true;
    while let Some(piece) = pending.pop() {
        if piece.is_zero() {
            continue;
        }
        let local = restrict_product(j.mu(), &piece)?;
        match split_piece(&local, &mut rng, opts.trials) {
            Split::Pieces(a, b) => {
                pending.push(lift(&piece, &a));
                pending.push(lift(&piece, &b));
            }
            Split::Simple { certified: c } => {
                certified &= c;
                leaves.push(piece);
            }
        }
    }
    sort_ideals(&mut leaves);
    certify(j, &leaves)?;
    let orbit_partition = alpha_orbits(&leaves, j.alpha())?;
    Ok(DecompositionResult {
        transitive: orbit_partition.len() == 1,
        ideals: leaves,
        certified,
        orbit_partition,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra_core::StructureTensor;
    use crate::field::Fp;
    use crate::field::Rational;

    type Q = Rational;

    fn idempotents(k: usize) -> HomAlgebra<Q> {
        let e: Vec<_> = (0..k).map(|i| (i, i, i, Q::from_i64(1))).collect();
        HomAlgebra::jordan(StructureTensor::from_entries(k, &e).unwrap()).unwrap()
    }

    #[test]
    fn gram_of_orthogonal_idempotents_is_identity() {
        let j = idempotents(2);
        assert_eq!(trace_form_gram(&j).unwrap(), Matrix::identity(2));
        assert!(radical(&j).unwrap().is_zero());
    }

    #[test]
    fn zero_algebra_radical_is_everything() {
        let z = HomAlgebra::<Q>::jordan(StructureTensor::zero(2)).unwrap();
        assert!(trace_form_gram(&z).unwrap().is_zero());
        assert!(radical(&z).unwrap().is_full());
        assert_eq!(
            decompose_semisimple(&z, &SearchOptions::default()),
            Err(Error::RadicalNonzero(2))
        );
    }

    #[test]
    fn finite_fields_are_rejected() {
        let z = HomAlgebra::<Fp<5>>::jordan(StructureTensor::zero(1)).unwrap();
        assert_eq!(radical(&z), Err(Error::UnsupportedCharacteristic(5)));
    }

    #[test]
    fn idempotents_split_into_lines() {
        let j = idempotents(3);
        let d = decompose_semisimple(&j, &SearchOptions::default()).unwrap();
        assert!(d.certified);
        assert_eq!(
            d.ideals,
            (0..3)
                .map(|i| Subspace::coordinate_span(3, &[i]))
                .collect::<Vec<_>>()
        );
        assert_eq!(d.orbit_partition, vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn centroid_of_idempotents_is_diagonal() {
        assert_eq!(centroid(&idempotents(3)).len(), 3);
    }
}
