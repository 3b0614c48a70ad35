use super::twist::{direct_sum, yau_twist};
use crate::algebra_core::{HomAlgebra, StructureTensor};
use crate::error::{Error, Result};
use crate::exactla::{vector, Matrix};
use crate::field::Field;

/// `μ(e, e) = e`, `α = k·id`.
pub fn family_dim1<F: Field>(k: F) -> HomAlgebra<F> {
    let mu = StructureTensor::from_entries(1, &[(0, 0, 0, F::one())]).expect("valid table");
    HomAlgebra::new(mu, Matrix::diagonal(&[k])).expect("valid table")
}

/// `μ(e₀,e₀) = e₀`, `μ(e₁,e₁) = e₁`, `μ(e₀,e₁) = e₀+e₁`, `α = diag(p, q)`.
pub fn family_dim2<F: Field>(p: F, q: F) -> HomAlgebra<F> {
    let one = F::one;
    let mu = StructureTensor::from_entries(
        2,
        &[
            (0, 0, 0, one()),
            (1, 1, 1, one()),
            (0, 1, 0, one()),
            (0, 1, 1, one()),
        ],
    )
    .expect("valid table");
    HomAlgebra::new(mu, Matrix::diagonal(&[p, q])).expect("valid table")
}

/// `μ(a_i, a_{i+1}) = a_{i+2}` (indices mod `n`), all other products zero.
pub fn family_cyclic<F: Field>(n: usize, alpha: Matrix<F>) -> Result<HomAlgebra<F>> {
    if n < 3 {
        return Err(Error::PreconditionFailed(format!(
            "cyclic family needs n >= 3, got {n}"
        )));
    }
    let entries: Vec<_> = (0..n)
        .map(|i| (i, (i + 1) % n, (i + 2) % n, F::one()))
        .collect();
    HomAlgebra::new(StructureTensor::from_entries(n, &entries)?, alpha)
}

/// The cyclic shift `a_i ↦ a_{i+1}`.
pub fn cyclic_shift<F: Field>(n: usize) -> Matrix<F> {
    Matrix::from_fn(n, n, |r, c| {
        if r == (c + 1) % n {
            F::one()
        } else {
            F::zero()
        }
    })
}

/// `μ(e₁,e₁) = e₂`, `μ(e₂,e₂) = e₁`, `α` swaps `e₁` and `e₂`.
pub fn fixture_example_4_4<F: Field>() -> HomAlgebra<F> {
    let mu = StructureTensor::from_entries(2, &[(0, 0, 1, F::one()), (1, 1, 0, F::one())])
        .expect("valid table");
    HomAlgebra::new(mu, Matrix::from_i64(&[&[0, 1], &[1, 0]])).expect("valid table")
}

/// `x∘y = ½(xy + yx)` for an associative table.
pub fn special_jordan_from_associative<F: Field>(
    assoc: &StructureTensor<F>,
) -> Result<HomAlgebra<F>> {
    if F::characteristic() == 2 {
        return Err(Error::CharacteristicTwo);
    }
    let n = assoc.dim();
    for i in 0..n {
        for j in 0..n {
            let ij = assoc.basis_product(i, j);
            for k in 0..n {
                let jk = assoc.basis_product(j, k);
                let left = assoc.apply(&ij, &vector::unit(n, k));
                let right = assoc.apply(&vector::unit(n, i), &jk);
                if left != right {
                    return Err(Error::NotAssociative);
                }
            }
        }
    }
    let half = F::from_i64(2).inverse().expect("characteristic is not 2");
    let mu = StructureTensor::from_fn(n, |i, j, k| {
        (assoc.get(i, j, k).clone() + assoc.get(j, i, k).clone()) * half.clone()
    });
    HomAlgebra::jordan(mu)
}

/// Associative table of `n×n` matrices in the basis `E_ab`, index `a·n + b`.
pub fn matrix_units<F: Field>(n: usize) -> StructureTensor<F> {
    let d = n * n;
    StructureTensor::from_fn(d, |x, y, z| {
        let (a, b) = (x / n, x % n);
        let (c, e) = (y / n, y % n);
        if b == c && z == a * n + e {
            F::one()
        } else {
            F::zero()
        }
    })
}

/// Basis `E_ab` (`a < b`) of strictly upper-triangular `n×n` matrices, in row-major order.
pub fn strict_upper_basis(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect()
}

/// Associative table of strictly upper-triangular `n×n` matrices.
pub fn strict_upper_triangular<F: Field>(n: usize) -> StructureTensor<F> {
    let basis = strict_upper_basis(n);
    StructureTensor::from_fn(basis.len(), |x, y, z| {
        let ((a, b), (c, e)) = (basis[x], basis[y]);
        if b == c && basis[z] == (a, e) {
            F::one()
        } else {
            F::zero()
        }
    })
}

/// `e_i e_j = δ_ij e_i`.
pub fn diagonal_algebra<F: Field>(n: usize) -> HomAlgebra<F> {
    let entries: Vec<_> = (0..n).map(|i| (i, i, i, F::one())).collect();
    HomAlgebra::jordan(StructureTensor::from_entries(n, &entries).expect("valid table"))
        .expect("valid table")
}

/// Transpose on `n×n` matrices in the `E_ab` basis.
pub fn transpose_map<F: Field>(n: usize) -> Matrix<F> {
    let d = n * n;
    Matrix::from_fn(d, d, |r, c| {
        if r == (c % n) * n + c / n {
            F::one()
        } else {
            F::zero()
        }
    })
}

/// `X ↦ g X g⁻¹` on `n×n` matrices in the `E_ab` basis.
pub fn conjugation_map<F: Field>(g: &Matrix<F>) -> Result<Matrix<F>> {
    let n = g.rows();
    let gi = g.inverse()?;
    let mut cols = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            let e = Matrix::from_fn(n, n, |r, c| {
                if (r, c) == (a, b) {
                    F::one()
                } else {
                    F::zero()
                }
            });
            let img = &(g * &e) * &gi;
            cols.push((0..n * n).map(|k| img.get(k / n, k % n).clone()).collect());
        }
    }
    Matrix::from_columns(&cols, n * n)
}

/// `X ↦ g X g⁻¹` restricted to strictly upper-triangular matrices; `g` must be
/// invertible upper triangular.
pub fn strict_upper_conjugation<F: Field>(g: &Matrix<F>) -> Result<Matrix<F>> {
    let n = g.rows();
    let basis = strict_upper_basis(n);
    let gi = g.inverse()?;
    let mut cols = Vec::with_capacity(basis.len());
    for &(a, b) in &basis {
        let e = Matrix::from_fn(n, n, |r, c| {
            if (r, c) == (a, b) {
                F::one()
            } else {
                F::zero()
            }
        });
        let img = &(g * &e) * &gi;
        for r in 0..n {
            for c in 0..=r.min(n - 1) {
                if !img.get(r, c).is_zero() {
                    return Err(Error::PreconditionFailed(
                        "conjugation leaves the strictly upper-triangular matrices".into(),
                    ));
                }
            }
        }
        cols.push(basis.iter().map(|&(r, c)| img.get(r, c).clone()).collect());
    }
    Matrix::from_columns(&cols, basis.len())
}

/// Permutation matrix sending `e_i` to `e_{perm[i]}`.
pub fn permutation_matrix<F: Field>(perm: &[usize]) -> Matrix<F> {
    let n = perm.len();
    Matrix::from_fn(n, n, |r, c| if perm[c] == r { F::one() } else { F::zero() })
}

/// `X = F[i]/(i² + 1)` in the basis `{1, i}`.
pub fn gaussian_algebra<F: Field>() -> HomAlgebra<F> {
    let one = F::one();
    let mu = StructureTensor::from_entries(
        2,
        &[
            (0, 0, 0, one.clone()),
            (0, 1, 1, one.clone()),
            (1, 1, 0, -one),
        ],
    )
    .expect("valid table");
    HomAlgebra::jordan(mu).expect("valid table")
}

/// Twist of `X ⊕ X` by `(x, y) ↦ (θ(y), x)`, where `X = F[i]/(i²+1)` and `θ`
/// is the identity or, when `conjugate` is set, `i ↦ -i`. The simple ideal
/// `X ⊕ 0` has orbit length 2 and `α²|X = θ`.
pub fn gaussian_pair<F: Field>(conjugate: bool) -> HomAlgebra<F> {
    let x = gaussian_algebra::<F>();
    let theta: Matrix<F> = if conjugate {
        Matrix::from_i64(&[&[1, 0], &[0, -1]])
    } else {
        Matrix::identity(2)
    };
    let j = direct_sum(&x, &x);
    let alpha = Matrix::from_fn(4, 4, |r, c| match (r < 2, c < 2) {
        (true, false) => theta.get(r, c - 2).clone(),
        (false, true) if r - 2 == c => F::one(),
        _ => F::zero(),
    });
    yau_twist(&j, &alpha).expect("the block swap is an automorphism")
}

/// Named algebras of dimension at most 3 that make sense over every prime
/// field, for cross-checking decision procedures against brute force.
pub fn small_corpus<F: Field>() -> Vec<(String, HomAlgebra<F>)> {
    let f = F::from_i64;
    let mut out: Vec<(String, HomAlgebra<F>)> = Vec::new();
    let mut add = |name: &str, a: HomAlgebra<F>| out.push((name.to_string(), a));
    let ex = fixture_example_4_4::<F>();
    add("ex4_4", ex.clone());
    add(
        "ex4_4_identity_twist",
        ex.with_alpha(Matrix::identity(2)).unwrap(),
    );
    add(
        "ex4_4_zero_twist",
        ex.with_alpha(Matrix::zeros(2, 2)).unwrap(),
    );
    add("ex4_4_plus_idempotent", direct_sum(&ex, &family_dim1(f(1))));
    add(
        "ex4_4_plus_zero",
        direct_sum(&ex, &HomAlgebra::zero(1, Matrix::identity(1)).unwrap()),
    );
    for k in [0, 1, 2] {
        add(&format!("dim1_k{k}"), family_dim1(f(k)));
    }
    for n in 1..=3 {
        add(
            &format!("zero{n}_identity"),
            HomAlgebra::zero(n, Matrix::identity(n)).unwrap(),
        );
        add(
            &format!("zero{n}_null"),
            HomAlgebra::zero(n, Matrix::zeros(n, n)).unwrap(),
        );
    }
    let d2 = diagonal_algebra::<F>(2);
    add("diag2", d2.clone());
    add(
        "diag2_swap",
        yau_twist(&d2, &permutation_matrix(&[1, 0])).unwrap(),
    );
    add(
        "diag2_kernel",
        yau_twist(&d2, &Matrix::diagonal(&[f(1), f(0)])).unwrap(),
    );
    let d3 = diagonal_algebra::<F>(3);
    add("diag3", d3.clone());
    add(
        "diag3_cycle",
        yau_twist(&d3, &permutation_matrix(&[1, 2, 0])).unwrap(),
    );
    add(
        "diag3_transposition",
        yau_twist(&d3, &permutation_matrix(&[1, 0, 2])).unwrap(),
    );
    add(
        "diag3_kernel",
        yau_twist(&d3, &Matrix::diagonal(&[f(1), f(1), f(0)])).unwrap(),
    );
    // e_0 ↦ e_1, e_1 ↦ e_0, e_2 ↦ 0
    let k = Matrix::from_i64(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 0]]);
    add("diag3_swap_kernel", yau_twist(&d3, &k).unwrap());
    for (p, q) in [(1, 1), (0, 1), (2, 3)] {
        add(&format!("dim2_p{p}_q{q}"), family_dim2(f(p), f(q)));
    }
    for (label, alpha) in [
        ("identity", Matrix::identity(3)),
        ("shift", cyclic_shift(3)),
        ("zero", Matrix::zeros(3, 3)),
    ] {
        add(
            &format!("cyclic3_{label}"),
            family_cyclic(3, alpha).unwrap(),
        );
    }
    let null = StructureTensor::from_entries(2, &[(0, 0, 1, f(1))]).unwrap();
    add(
        "null_square",
        HomAlgebra::new(null.clone(), Matrix::identity(2)).unwrap(),
    );
    add(
        "null_square_kernel",
        HomAlgebra::new(null, Matrix::diagonal(&[f(1), f(0)])).unwrap(),
    );
    add("gaussian", gaussian_algebra());
    add(
        "idempotent_pair_swap",
        yau_twist(
            &direct_sum(&family_dim1(f(1)), &family_dim1(f(1))),
            &permutation_matrix(&[1, 0]),
        )
        .unwrap(),
    );
    out
}

/// A named Jordan algebra and an endomorphism of its product.
pub type TwistPair<F> = (String, HomAlgebra<F>, Matrix<F>);

/// Jordan algebras paired with endomorphisms of their product, over a field of
/// characteristic 0 or at least 3.
pub fn jordan_twist_pairs<F: Field>() -> Result<Vec<TwistPair<F>>> {
    let m = |rows: &[&[i64]]| Matrix::<F>::from_i64(rows);
    let mut out = Vec::new();
    let m2 = special_jordan_from_associative(&matrix_units::<F>(2))?;
    out.push(("m2_identity".to_string(), m2.clone(), Matrix::identity(4)));
    out.push(("m2_transpose".to_string(), m2.clone(), transpose_map(2)));
    for (name, g) in [
        ("m2_conj_unipotent", m(&[&[1, 1], &[0, 1]])),
        ("m2_conj_lower", m(&[&[1, 0], &[1, 1]])),
        ("m2_conj_swap", m(&[&[0, 1], &[1, 0]])),
        ("m2_conj_diag", m(&[&[2, 0], &[0, 1]])),
        ("m2_conj_generic", m(&[&[1, 2], &[3, 4]])),
    ] {
        let c = conjugation_map(&g)?;
        out.push((name.to_string(), m2.clone(), c.clone()));
        out.push((
            format!("{name}_transpose"),
            m2.clone(),
            &c * &transpose_map(2),
        ));
    }
    let d2 = diagonal_algebra::<F>(2);
    out.push((
        "diag2_identity".to_string(),
        d2.clone(),
        Matrix::identity(2),
    ));
    out.push(("diag2_swap".to_string(), d2, permutation_matrix(&[1, 0])));
    let d3 = diagonal_algebra::<F>(3);
    for perm in [
        [0, 1, 2],
        [1, 2, 0],
        [2, 0, 1],
        [1, 0, 2],
        [0, 2, 1],
        [2, 1, 0],
    ] {
        out.push((
            format!("diag3_perm{}{}{}", perm[0], perm[1], perm[2]),
            d3.clone(),
            permutation_matrix(&perm),
        ));
    }
    let su = special_jordan_from_associative(&strict_upper_triangular::<F>(3))?;
    for (name, g) in strict_upper_automorphisms::<F>() {
        out.push((
            format!("strict_upper3_{name}"),
            su.clone(),
            strict_upper_conjugation(&g)?,
        ));
    }
    Ok(out)
}

/// Invertible upper-triangular `3×3` matrices; conjugation by each is an
/// automorphism of the strictly upper-triangular matrices.
pub fn strict_upper_automorphisms<F: Field>() -> Vec<(String, Matrix<F>)> {
    let m = |rows: &[&[i64]]| Matrix::<F>::from_i64(rows);
    vec![
        ("identity".into(), Matrix::identity(3)),
        (
            "diag_1_2_3".into(),
            m(&[&[1, 0, 0], &[0, 2, 0], &[0, 0, 3]]),
        ),
        (
            "diag_2_1_1".into(),
            m(&[&[2, 0, 0], &[0, 1, 0], &[0, 0, 1]]),
        ),
        (
            "diag_1_1_5".into(),
            m(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 5]]),
        ),
        (
            "unipotent_01".into(),
            m(&[&[1, 1, 0], &[0, 1, 0], &[0, 0, 1]]),
        ),
        (
            "unipotent_12".into(),
            m(&[&[1, 0, 0], &[0, 1, 2], &[0, 0, 1]]),
        ),
        ("mixed".into(), m(&[&[2, 1, 3], &[0, 1, 1], &[0, 0, 4]])),
    ]
}
