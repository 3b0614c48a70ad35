//! JSON file formats for algebras, bimodules and bare matrices.

use std::path::{Path, PathBuf};

use homjordan::{BimoduleRep, Field, FieldDescriptor, HomAlgebra, Matrix, StructureTensor};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum DocumentError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("parse error at line {line}, column {column}: {msg}")]
    Syntax {
        line: usize,
        column: usize,
        msg: String,
    },
    #[error("parse error in {field}: {msg}")]
    Field { field: String, msg: String },
    #[error("invariant violation: {0}")]
    Invariant(String),
}

fn field_err(field: impl Into<String>, msg: impl ToString) -> DocumentError {
    DocumentError::Field {
        field: field.into(),
        msg: msg.to_string(),
    }
}

impl From<serde_json::Error> for DocumentError {
    fn from(e: serde_json::Error) -> Self {
        let suffix = format!(" at line {} column {}", e.line(), e.column());
        let msg = e.to_string();
        DocumentError::Syntax {
            line: e.line(),
            column: e.column(),
            msg: msg.strip_suffix(&suffix).unwrap_or(&msg).to_string(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", deny_unknown_fields)]
pub enum FieldSpec {
    Q,
    GF { p: u64 },
}

impl FieldSpec {
    pub fn of(d: FieldDescriptor) -> Self {
        match d {
            FieldDescriptor::Rationals => FieldSpec::Q,
            FieldDescriptor::PrimeField { p } => FieldSpec::GF { p },
        }
    }

    /// `Q`, `GF(5)` or `GF5`.
    pub fn parse(s: &str) -> Result<Self, DocumentError> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("q") {
            return Ok(FieldSpec::Q);
        }
        let digits = t
            .strip_prefix("GF")
            .or_else(|| t.strip_prefix("gf"))
            .map(|r| r.trim_start_matches('(').trim_end_matches(')'))
            .ok_or_else(|| field_err("field", format!("unknown field {s:?}")))?;
        let p = digits
            .parse()
            .map_err(|_| field_err("field", format!("unknown field {s:?}")))?;
        Ok(FieldSpec::GF { p })
    }
}

impl std::fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FieldSpec::Q => write!(f, "Q"),
            FieldSpec::GF { p } => write!(f, "GF({p})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MuEntry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub c: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDocument {
    pub kind: String,
    pub field: FieldSpec,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis_labels: Option<Vec<String>>,
    pub mu: Vec<MuEntry>,
    pub alpha: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub jordan_mode: Option<bool>,
}

/// The `algebra` member of a bimodule document: inline or a path relative to
/// the bimodule file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlgebraRef {
    Path(String),
    Inline(Box<AlgebraDocument>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BimoduleDocument {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<AlgebraRef>,
    pub dim_w: usize,
    pub alpha_w: Vec<Vec<String>>,
    pub rho_l: Vec<Vec<Vec<String>>>,
}

pub const ALGEBRA_KIND: &str = "hom_algebra";
pub const BIMODULE_KIND: &str = "bimodule";

pub fn read_file(path: &Path) -> Result<String, DocumentError> {
    std::fs::read_to_string(path).map_err(|source| DocumentError::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn algebra_document(text: &str) -> Result<AlgebraDocument, DocumentError> {
    let doc: AlgebraDocument = serde_json::from_str(text)?;
    if doc.kind != ALGEBRA_KIND {
        return Err(field_err(
            "kind",
            format!("expected {ALGEBRA_KIND:?}, found {:?}", doc.kind),
        ));
    }
    Ok(doc)
}

pub fn bimodule_document(text: &str) -> Result<BimoduleDocument, DocumentError> {
    let doc: BimoduleDocument = serde_json::from_str(text)?;
    if doc.kind != BIMODULE_KIND {
        return Err(field_err(
            "kind",
            format!("expected {BIMODULE_KIND:?}, found {:?}", doc.kind),
        ));
    }
    Ok(doc)
}

pub fn parse_scalar<F: Field>(s: &str, field: &str) -> Result<F, DocumentError> {
    F::parse_scalar(s).map_err(|e| field_err(field, e))
}

pub fn parse_matrix<F: Field>(
    rows: &[Vec<String>],
    n_rows: usize,
    n_cols: usize,
    field: &str,
) -> Result<Matrix<F>, DocumentError> {
    if rows.len() != n_rows {
        return Err(field_err(
            field,
            format!("expected {n_rows} rows, found {}", rows.len()),
        ));
    }
    let mut out = Matrix::zeros(n_rows, n_cols);
    for (r, row) in rows.iter().enumerate() {
        if row.len() != n_cols {
            return Err(field_err(
                format!("{field}[{r}]"),
                format!("expected {n_cols} entries, found {}", row.len()),
            ));
        }
        for (c, s) in row.iter().enumerate() {
            out.set(r, c, parse_scalar(s, &format!("{field}[{r}][{c}]"))?);
        }
    }
    Ok(out)
}

pub fn matrix_strings<F: Field>(m: &Matrix<F>) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| m.get(r, c).to_string()).collect())
        .collect()
}

fn check_field<F: Field>(spec: FieldSpec) -> Result<(), DocumentError> {
    let want = FieldSpec::of(F::descriptor());
    if spec != want {
        return Err(field_err(
            "field",
            format!("document is over {spec}, expected {want}"),
        ));
    }
    Ok(())
}

/// Builds the algebra described by `doc`. Entries `(i,j,k)` and `(j,i,k)` are
/// symmetrized; a mirrored pair with different values is rejected.
pub fn algebra_from_document<F: Field>(
    doc: &AlgebraDocument,
) -> Result<HomAlgebra<F>, DocumentError> {
    check_field::<F>(doc.field)?;
    let n = doc.dim;
    if let Some(labels) = &doc.basis_labels {
        if labels.len() != n {
            return Err(field_err(
                "basis_labels",
                format!("expected {n} labels, found {}", labels.len()),
            ));
        }
    }
    let mut entries = Vec::with_capacity(doc.mu.len());
    for (idx, e) in doc.mu.iter().enumerate() {
        for (name, v) in [("i", e.i), ("j", e.j), ("k", e.k)] {
            if v >= n {
                return Err(field_err(
                    format!("mu[{idx}].{name}"),
                    format!("index {v} out of range for dim {n}"),
                ));
            }
        }
        entries.push((
            e.i,
            e.j,
            e.k,
            parse_scalar::<F>(&e.c, &format!("mu[{idx}].c"))?,
        ));
    }
    let mu = StructureTensor::from_entries(n, &entries)
        .map_err(|e| DocumentError::Invariant(e.to_string()))?;
    let alpha = parse_matrix::<F>(&doc.alpha, n, n, "alpha")?;
    if doc.jordan_mode == Some(true) {
        if alpha != Matrix::identity(n) {
            return Err(DocumentError::Invariant(
                "jordan_mode requires alpha = identity".into(),
            ));
        }
        return HomAlgebra::jordan(mu).map_err(|e| DocumentError::Invariant(e.to_string()));
    }
    HomAlgebra::new(mu, alpha).map_err(|e| DocumentError::Invariant(e.to_string()))
}

/// Canonical document: entries with `i ≤ j` in lexicographic order, reduced
/// scalars.
pub fn algebra_to_document<F: Field>(
    a: &HomAlgebra<F>,
    labels: Option<Vec<String>>,
) -> AlgebraDocument {
    let n = a.dim();
    let mut mu = Vec::new();
    for i in 0..n {
        for j in i..n {
            for k in 0..n {
                let c = a.mu().get(i, j, k);
                if !c.is_zero() {
                    mu.push(MuEntry {
                        i,
                        j,
                        k,
                        c: c.to_string(),
                    });
                }
            }
        }
    }
    AlgebraDocument {
        kind: ALGEBRA_KIND.into(),
        field: FieldSpec::of(F::descriptor()),
        dim: n,
        basis_labels: labels,
        mu,
        alpha: matrix_strings(a.alpha()),
        jordan_mode: a.is_jordan_mode().then_some(true),
    }
}

pub fn to_pretty_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

pub fn serialize_algebra<F: Field>(a: &HomAlgebra<F>) -> String {
    to_pretty_json(&algebra_to_document(a, None))
}

pub fn parse_algebra<F: Field>(text: &str) -> Result<HomAlgebra<F>, DocumentError> {
    algebra_from_document(&algebra_document(text)?)
}

/// Resolves the algebra of a bimodule document against an explicitly given
/// algebra document; both must agree when both are present.
pub fn resolve_bimodule_algebra(
    doc: &BimoduleDocument,
    doc_path: Option<&Path>,
    explicit: Option<AlgebraDocument>,
) -> Result<AlgebraDocument, DocumentError> {
    let embedded = match &doc.algebra {
        None => None,
        Some(AlgebraRef::Inline(a)) => Some((**a).clone()),
        Some(AlgebraRef::Path(p)) => {
            let base = doc_path
                .and_then(Path::parent)
                .map(Path::to_path_buf)
                .unwrap_or_default();
            let full: PathBuf = base.join(p);
            Some(algebra_document(&read_file(&full)?)?)
        }
    };
    match (embedded, explicit) {
        (Some(e), Some(x)) => {
            if e.field != x.field || e.dim != x.dim {
                return Err(DocumentError::Invariant(
                    "bimodule document refers to a different algebra".into(),
                ));
            }
            Ok(x)
        }
        (Some(e), None) => Ok(e),
        (None, Some(x)) => Ok(x),
        (None, None) => Err(field_err("algebra", "no algebra given")),
    }
}

pub fn bimodule_from_document<F: Field>(
    doc: &BimoduleDocument,
    algebra: HomAlgebra<F>,
) -> Result<BimoduleRep<F>, DocumentError> {
    let m = doc.dim_w;
    let alpha_w = parse_matrix::<F>(&doc.alpha_w, m, m, "alpha_w")?;
    if doc.rho_l.len() != algebra.dim() {
        return Err(field_err(
            "rho_l",
            format!(
                "expected {} matrices, found {}",
                algebra.dim(),
                doc.rho_l.len()
            ),
        ));
    }
    let lambda = doc
        .rho_l
        .iter()
        .enumerate()
        .map(|(i, rows)| parse_matrix::<F>(rows, m, m, &format!("rho_l[{i}]")))
        .collect::<Result<Vec<_>, _>>()?;
    BimoduleRep::new(algebra, alpha_w, lambda).map_err(|e| DocumentError::Invariant(e.to_string()))
}

pub fn bimodule_to_document<F: Field>(r: &BimoduleRep<F>) -> BimoduleDocument {
    BimoduleDocument {
        kind: BIMODULE_KIND.into(),
        algebra: Some(AlgebraRef::Inline(Box::new(algebra_to_document(
            r.algebra(),
            None,
        )))),
        dim_w: r.dim(),
        alpha_w: matrix_strings(r.alpha_w()),
        rho_l: r.lambda().iter().map(matrix_strings).collect(),
    }
}

/// A bare matrix file: either `[[...], ...]` or `{"matrix": [[...], ...]}`.
pub fn parse_matrix_file<F: Field>(text: &str, n: usize) -> Result<Matrix<F>, DocumentError> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum MatrixFile {
        Bare(Vec<Vec<String>>),
        Wrapped { matrix: Vec<Vec<String>> },
    }
    let rows = match serde_json::from_str::<MatrixFile>(text)? {
        MatrixFile::Bare(r) | MatrixFile::Wrapped { matrix: r } => r,
    };
    parse_matrix(&rows, n, n, "matrix")
}

/// `"1,0,2;0,1,1"`: vectors separated by `;`, entries by `,`.
pub fn parse_vectors<F: Field>(s: &str, n: usize) -> Result<Vec<Vec<F>>, DocumentError> {
    s.split(';')
        .filter(|v| !v.trim().is_empty())
        .enumerate()
        .map(|(idx, v)| {
            let entries: Vec<&str> = v.split(',').collect();
            if entries.len() != n {
                return Err(field_err(
                    format!("vector {idx}"),
                    format!("expected {n} entries, found {}", entries.len()),
                ));
            }
            entries
                .iter()
                .map(|e| parse_scalar::<F>(e, &format!("vector {idx}")))
                .collect()
        })
        .collect()
}
