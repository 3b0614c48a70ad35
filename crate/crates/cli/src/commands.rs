//! Command implementations. Each returns a report body and an exit code:
//! 0 when the property holds, 1 when it fails, 2 when it is undecidable.

use std::path::Path;

use homjordan::algebra_core::{
    check_commutative, check_hom_jordan, check_isomorphism, check_jordan, check_multiplicative,
    CheckOptions, Outcome, VerificationReport,
};
use homjordan::bimodule::{
    bimodule_to_module, check_bimodule, check_equivariance, check_jordan_module,
    irreducibility_transfer_check, is_irreducible, kernel_image_analysis, module_to_bimodule,
    Irreducibility,
};
use homjordan::constructions::{
    check_projection, classification_signature, compare_signatures, cyclic_shift, family_cyclic,
    family_dim1, family_dim2, induced_jordan, iso_search_smallfield, lift_ideal_isomorphism,
    quotient_algebra, split_idempotent_alpha, yau_twist, ClassificationSignature,
    SignatureComparison,
};
use homjordan::structure::{
    decompose_semisimple, derived_series, ideal_closure, induced_algebra, is_semisimple, is_simple,
    radical, Semisimplicity, Simplicity,
};
use homjordan::{BimoduleRep, Error, Field, HomAlgebra, Matrix};
use serde_json::{json, Map, Value};

use crate::document::{
    algebra_document, algebra_from_document, algebra_to_document, bimodule_document,
    bimodule_from_document, parse_matrix_file, parse_scalar, parse_vectors, read_file,
    resolve_bimodule_algebra, AlgebraDocument, FieldSpec,
};
use crate::report::{self, checks, combine, outcome_label};
use crate::{
    with_field, BimoduleAction, CliError, Command, CommandOutput, FamilyKind, GlobalOptions,
};

type Res = Result<CommandOutput, CliError>;

struct Input {
    text: String,
}

fn load(path: &str) -> Result<Input, CliError> {
    Ok(Input {
        text: read_file(Path::new(path))?,
    })
}

fn code_of(o: Outcome) -> i32 {
    match o {
        Outcome::Holds => 0,
        Outcome::Fails => 1,
        Outcome::Undecidable => 2,
    }
}

fn check_opts(g: &GlobalOptions) -> CheckOptions {
    CheckOptions {
        budget: g.budget,
        ..CheckOptions::default()
    }
}

fn with_inputs(mut out: CommandOutput, inputs: &[&Input], field: FieldSpec) -> CommandOutput {
    let bytes: Vec<&[u8]> = inputs.iter().map(|i| i.text.as_bytes()).collect();
    if let Value::Object(m) = &mut out.body {
        m.insert("input_digest".into(), json!(report::digest(&bytes)));
        m.insert("field".into(), json!(field.to_string()));
        m.entry("status").or_insert(json!("ok"));
    }
    out
}

fn doc_value<F: Field>(a: &HomAlgebra<F>) -> Value {
    serde_json::to_value(algebra_to_document(a, None)).expect("documents serialize")
}

pub fn execute(c: &Command, g: &GlobalOptions) -> Res {
    match c {
        Command::Verify { file } => {
            single(file, |doc| with_field!(doc.field, |F| verify::<F>(doc, g)))
        }
        Command::Analyze { file } => {
            single(file, |doc| with_field!(doc.field, |F| analyze::<F>(doc, g)))
        }
        Command::Induced { file } => {
            single(file, |doc| with_field!(doc.field, |F| induced::<F>(doc)))
        }
        Command::Split { file } => {
            single(file, |doc| with_field!(doc.field, |F| split::<F>(doc, g)))
        }
        Command::Signature { file } => single(file, |doc| {
            with_field!(doc.field, |F| signature::<F>(doc, g))
        }),
        Command::Twist { file, alpha } => {
            let alpha_in = load(alpha)?;
            let inp = load(file)?;
            let doc = algebra_document(&inp.text)?;
            let out = with_field!(doc.field, |F| twist::<F>(&doc, &alpha_in.text, g))?;
            Ok(with_inputs(out, &[&inp, &alpha_in], doc.field))
        }
        Command::Quotient { file, ideal_gens } => single(file, |doc| {
            with_field!(doc.field, |F| quotient::<F>(doc, ideal_gens, g))
        }),
        Command::Family {
            kind,
            field,
            k,
            p,
            q,
            n,
            alpha,
            raw,
        } => {
            let spec = FieldSpec::parse(field)?;
            let args = FamilyArgs {
                kind: *kind,
                k,
                p,
                q,
                n: *n,
                alpha,
                raw: *raw,
            };
            let out = with_field!(spec, |F| family::<F>(&args, g))?;
            let mut out = out;
            if let Value::Object(m) = &mut out.body {
                m.insert("field".into(), json!(spec.to_string()));
                m.insert("status".into(), json!("ok"));
            }
            Ok(out)
        }
        Command::Iso {
            file_a,
            file_b,
            search,
            m1,
        } => {
            let a_in = load(file_a)?;
            let b_in = load(file_b)?;
            let da = algebra_document(&a_in.text)?;
            let db = algebra_document(&b_in.text)?;
            if da.field != db.field {
                return Err(CliError::Usage(format!(
                    "algebras are over {} and {}",
                    da.field, db.field
                )));
            }
            let m1_in = m1.as_deref().map(load).transpose()?;
            let m1_text = m1_in.as_ref().map(|i| i.text.as_str());
            let out = with_field!(da.field, |F| iso::<F>(&da, &db, *search, m1_text, g))?;
            let mut inputs = vec![&a_in, &b_in];
            inputs.extend(m1_in.as_ref());
            Ok(with_inputs(out, &inputs, da.field))
        }
        Command::Bimodule { action } => {
            let (alg, module) = match action {
                BimoduleAction::Verify { algebra, module }
                | BimoduleAction::Transport { algebra, module }
                | BimoduleAction::Analyze { algebra, module } => (algebra, module),
            };
            let a_in = load(alg)?;
            let m_in = load(module)?;
            let adoc = algebra_document(&a_in.text)?;
            let mdoc = bimodule_document(&m_in.text)?;
            let adoc = resolve_bimodule_algebra(&mdoc, Some(Path::new(module)), Some(adoc))?;
            let out = with_field!(adoc.field, |F| {
                let a = algebra_from_document::<F>(&adoc)?;
                let r = bimodule_from_document(&mdoc, a)?;
                match action {
                    BimoduleAction::Verify { .. } => bimodule_verify(&r),
                    BimoduleAction::Transport { .. } => bimodule_transport(&r),
                    BimoduleAction::Analyze { .. } => bimodule_analyze(&r, g),
                }
            })?;
            Ok(with_inputs(out, &[&a_in, &m_in], adoc.field))
        }
        Command::DiscrepancyLog => crate::discrepancy::run(g),
    }
}

fn single(file: &str, f: impl FnOnce(&AlgebraDocument) -> Res) -> Res {
    let inp = load(file)?;
    let doc = algebra_document(&inp.text)?;
    let out = f(&doc)?;
    Ok(with_inputs(out, &[&inp], doc.field))
}

pub fn verify_report<F: Field>(a: &HomAlgebra<F>, g: &GlobalOptions) -> VerificationReport<F> {
    let mut r = check_commutative(a);
    r.extend(check_hom_jordan(a, check_opts(g)));
    r.extend(check_multiplicative(a));
    r
}

fn verify<F: Field>(doc: &AlgebraDocument, g: &GlobalOptions) -> Res {
    let a = algebra_from_document::<F>(doc)?;
    let r = verify_report(&a, g);
    let outcome = r.outcome();
    Ok(CommandOutput::new(
        json!({ "dim": a.dim(), "checks": checks(&r), "outcome": outcome_label(outcome) }),
        code_of(outcome),
    ))
}

fn unavailable(reason: impl ToString) -> Value {
    json!({ "status": "unavailable", "reason": reason.to_string() })
}

fn simplicity_value<F: Field>(s: &Simplicity<F>) -> Value {
    match s {
        Simplicity::Simple {
            decomposition,
            certified,
        } => {
            let mut v = json!({ "verdict": "simple", "certified": certified });
            if let Some(d) = decomposition {
                v["orbit_partition"] = json!(d.orbit_partition);
            }
            v
        }
        Simplicity::NotSimple { reason, ideal } => {
            let mut v = json!({ "verdict": "not_simple", "reason": reason });
            if let Some(i) = ideal {
                v["ideal"] = report::subspace(i);
            }
            v
        }
        Simplicity::Unsupported(reason) => json!({ "verdict": "unsupported", "reason": reason }),
    }
}

fn induced_section<F: Field>(a: &HomAlgebra<F>, g: &GlobalOptions) -> Value {
    if !a.alpha_invertible() {
        return unavailable("twist map is singular");
    }
    if !check_multiplicative(a).holds() {
        return unavailable("algebra is not multiplicative");
    }
    let induced = match induced_algebra(a) {
        Ok(i) => i,
        Err(e) => return unavailable(e),
    };
    let mut out = Map::new();
    out.insert(
        "jordan_identity".into(),
        match check_jordan(
            &HomAlgebra::jordan(induced.mu().clone()).expect("symmetric"),
            check_opts(g),
        ) {
            Ok(r) => report::verdict(r.get("jordan").expect("jordan check")),
            Err(e) => unavailable(e),
        },
    );
    match radical(&induced) {
        Ok(rad) => {
            out.insert("radical".into(), report::subspace(&rad));
            if rad.is_zero() {
                let d = decompose_semisimple(&induced, &g.search());
                out.insert(
                    "decomposition".into(),
                    match d {
                        Ok(d) => json!({
                            "ideals": d.ideals.iter().map(report::subspace).collect::<Vec<_>>(),
                            "orbit_partition": d.orbit_partition,
                            "transitive": d.transitive,
                            "certified": d.certified,
                        }),
                        Err(e) => unavailable(e),
                    },
                );
            }
        }
        Err(e) => {
            out.insert("radical".into(), unavailable(e));
        }
    }
    Value::Object(out)
}

pub fn signature_value<F: Field>(s: &ClassificationSignature<F>) -> Value {
    let entries: Vec<Value> = s
        .ideal_tensor
        .sparse_entries()
        .iter()
        .map(|(i, j, k, c)| json!({ "i": i, "j": j, "k": k, "c": c.to_string() }))
        .collect();
    json!({
        "m": s.ideal_dim(),
        "n": s.n,
        "total_dim": s.total_dim,
        "ideal_basis": s.ideal_basis.iter().map(|v| report::vector(v)).collect::<Vec<_>>(),
        "ideal_mu": entries,
        "a1": report::matrix(&s.a1),
        "a1_invariant_factors": report::similarity(&s.a1_invariants),
    })
}

fn analyze<F: Field>(doc: &AlgebraDocument, g: &GlobalOptions) -> Res {
    let a = algebra_from_document::<F>(doc)?;
    let opts = g.search();
    let series = derived_series(&a);
    let simplicity = is_simple(&a, &opts);
    let simple = simplicity.as_ref().is_ok_and(Simplicity::is_simple);
    let mut body = json!({
        "dim": a.dim(),
        "checks": checks(&verify_report(&a, g)),
        "derived_series": {
            "dims": series.dims(),
            "terms": series.terms.iter().map(report::subspace).collect::<Vec<_>>(),
        },
        "solvable": series.is_solvable(),
        "alpha": {
            "kernel": report::subspace(&a.kernel_alpha()),
            "image": report::subspace(&a.image_alpha()),
            "invertible": a.alpha_invertible(),
        },
        "induced": induced_section(&a, g),
        "simplicity": match &simplicity {
            Ok(s) => simplicity_value(s),
            Err(e) => unavailable(e),
        },
        "semisimplicity": match is_semisimple(&a, &opts) {
            Ok(Semisimplicity::Semisimple(d)) => json!({
                "verdict": "semisimple",
                "summands": d.summands.iter().map(report::subspace).collect::<Vec<_>>(),
            }),
            Ok(Semisimplicity::NotSemisimple(reason)) => json!({ "verdict": "not_semisimple", "reason": reason }),
            Err(e) => unavailable(e),
        },
    });
    body["signature"] = if simple {
        match classification_signature(&a, &opts) {
            Ok(s) => signature_value(&s),
            Err(e) => unavailable(e),
        }
    } else {
        unavailable("algebra is not known to be simple")
    };
    Ok(CommandOutput::new(body, 0))
}

fn induced<F: Field>(doc: &AlgebraDocument) -> Res {
    let a = algebra_from_document::<F>(doc)?;
    let j = induced_jordan(&a)?;
    let r = check_jordan(&j, CheckOptions::default())?;
    let outcome = r.outcome();
    Ok(CommandOutput::new(
        json!({ "algebra": doc_value(&j), "checks": checks(&r) }),
        code_of(outcome),
    ))
}

fn twist<F: Field>(doc: &AlgebraDocument, alpha_text: &str, g: &GlobalOptions) -> Res {
    let j = algebra_from_document::<F>(doc)?;
    let alpha = parse_matrix_file::<F>(alpha_text, j.dim())?;
    let t = yau_twist(&j, &alpha)?;
    let mut r = check_hom_jordan(&t, check_opts(g));
    r.extend(check_multiplicative(&t));
    let round_trip = if alpha.is_invertible() {
        json!(induced_jordan(&t)?.mu() == j.mu())
    } else {
        json!(null)
    };
    let outcome = r.outcome();
    Ok(CommandOutput::new(
        json!({ "algebra": doc_value(&t), "checks": checks(&r), "induced_round_trip": round_trip }),
        code_of(outcome),
    ))
}

fn quotient<F: Field>(doc: &AlgebraDocument, gens: &str, g: &GlobalOptions) -> Res {
    let a = algebra_from_document::<F>(doc)?;
    let gens = parse_vectors::<F>(gens, a.dim())?;
    let ideal = ideal_closure(&a, gens)?;
    let q = quotient_algebra(&a, &ideal)?;
    let projection = check_projection(&a, &ideal)?;
    let qr = verify_report(&q, g);
    Ok(CommandOutput::new(
        json!({
            "ideal": report::subspace(&ideal),
            "algebra": doc_value(&q),
            "projection": checks(&projection),
            "quotient_checks": checks(&qr),
            "quotient_alpha_invertible": q.alpha_invertible(),
        }),
        code_of(projection.outcome()),
    ))
}

fn split<F: Field>(doc: &AlgebraDocument, g: &GlobalOptions) -> Res {
    let a = algebra_from_document::<F>(doc)?;
    let s = split_idempotent_alpha(&a)?;
    let qr = verify_report(&s.summand_quotient, g);
    let outcome = combine([s.iso_report.outcome(), s.phi_report.outcome(), qr.outcome()]);
    Ok(CommandOutput::new(
        json!({
            "quotient": {
                "algebra": doc_value(&s.summand_quotient),
                "checks": checks(&qr),
                "alpha_invertible": s.summand_quotient.alpha_invertible(),
            },
            "kernel": { "algebra": doc_value(&s.summand_kernel) },
            "isomorphism": { "matrix": report::matrix(&s.iso), "checks": checks(&s.iso_report) },
            "quotient_to_image": { "matrix": report::matrix(&s.phi), "checks": checks(&s.phi_report) },
        }),
        code_of(outcome),
    ))
}

struct FamilyArgs<'a> {
    kind: FamilyKind,
    k: &'a str,
    p: &'a str,
    q: &'a str,
    n: usize,
    alpha: &'a str,
    raw: bool,
}

fn family<F: Field>(args: &FamilyArgs, g: &GlobalOptions) -> Res {
    let (a, params) = match args.kind {
        FamilyKind::Dim1 => {
            let k = parse_scalar::<F>(args.k, "k")?;
            (
                family_dim1(k.clone()),
                json!({ "kind": "dim1", "k": k.to_string() }),
            )
        }
        FamilyKind::Dim2 => {
            let p = parse_scalar::<F>(args.p, "p")?;
            let q = parse_scalar::<F>(args.q, "q")?;
            (
                family_dim2(p.clone(), q.clone()),
                json!({ "kind": "dim2", "p": p.to_string(), "q": q.to_string() }),
            )
        }
        FamilyKind::Cyclic => {
            let n = args.n;
            let alpha = match args.alpha {
                "identity" => Matrix::identity(n),
                "shift" => cyclic_shift(n),
                "zero" => Matrix::zeros(n, n),
                path => parse_matrix_file::<F>(&read_file(Path::new(path))?, n)?,
            };
            (
                family_cyclic(n, alpha)?,
                json!({ "kind": "cyclic", "n": n, "alpha": args.alpha }),
            )
        }
    };
    if args.raw {
        let mut out = CommandOutput::new(json!({}), 0);
        out.raw = Some(crate::document::serialize_algebra(&a));
        return Ok(out);
    }
    let r = verify_report(&a, g);
    Ok(CommandOutput::new(
        json!({ "parameters": params, "algebra": doc_value(&a), "checks": checks(&r) }),
        0,
    ))
}

fn signature<F: Field>(doc: &AlgebraDocument, g: &GlobalOptions) -> Res {
    let a = algebra_from_document::<F>(doc)?;
    let s = classification_signature(&a, &g.search())?;
    Ok(CommandOutput::new(
        json!({ "signature": signature_value(&s) }),
        0,
    ))
}

fn iso<F: Field>(
    da: &AlgebraDocument,
    db: &AlgebraDocument,
    search: bool,
    m1: Option<&str>,
    g: &GlobalOptions,
) -> Res {
    let a = algebra_from_document::<F>(da)?;
    let b = algebra_from_document::<F>(db)?;
    let opts = g.search();
    let sa = classification_signature(&a, &opts)?;
    let sb = classification_signature(&b, &opts)?;
    let comparison = compare_signatures(&sa, &sb);
    let mut body = json!({
        "signatures": [signature_value(&sa), signature_value(&sb)],
        "comparison": match &comparison {
            SignatureComparison::Distinct(r) => json!({ "verdict": "distinct", "reason": r }),
            SignatureComparison::PossiblyIsomorphic => json!({ "verdict": "possibly_isomorphic" }),
        },
    });
    let certificate = |phi: &Matrix<F>| -> Result<Value, CliError> {
        let r = check_isomorphism(phi, &a, &b)?;
        Ok(json!({ "matrix": report::matrix(phi), "checks": checks(&r) }))
    };
    let verdict;
    if let SignatureComparison::Distinct(_) = comparison {
        verdict = "not_isomorphic";
    } else if let Some(text) = m1 {
        let m1 = parse_matrix_file::<F>(text, sa.ideal_dim())?;
        match lift_ideal_isomorphism(&m1, &a, &b, &opts) {
            Ok(phi) => {
                body["isomorphism"] = certificate(&phi)?;
                verdict = "isomorphic";
            }
            Err(e @ (Error::NotIdealIso | Error::IntertwiningFailed)) => {
                body["lift"] = unavailable(e);
                verdict = "undetermined";
            }
            Err(e) => return Err(e.into()),
        }
    } else if search {
        match iso_search_smallfield(&a, &b, &opts)? {
            Some(phi) => {
                body["isomorphism"] = certificate(&phi)?;
                verdict = "isomorphic";
            }
            None => verdict = "not_isomorphic",
        }
    } else {
        match lift_ideal_isomorphism(&Matrix::identity(sa.ideal_dim()), &a, &b, &opts) {
            Ok(phi) => {
                body["isomorphism"] = certificate(&phi)?;
                verdict = "isomorphic";
            }
            Err(_) => verdict = "undetermined",
        }
    }
    body["verdict"] = json!(verdict);
    let code = match verdict {
        "isomorphic" => 0,
        "not_isomorphic" => 1,
        _ => 2,
    };
    Ok(CommandOutput::new(body, code))
}

fn bimodule_verify<F: Field>(r: &BimoduleRep<F>) -> Res {
    let rep = check_bimodule(r);
    let eq = check_equivariance(r);
    Ok(CommandOutput::new(
        json!({
            "dim_w": r.dim(),
            "checks": checks(&rep),
            "equivariance": checks(&eq),
        }),
        code_of(rep.outcome()),
    ))
}

fn bimodule_transport<F: Field>(r: &BimoduleRep<F>) -> Res {
    let m = bimodule_to_module(r)?;
    let mr = check_jordan_module(&m);
    let back = module_to_bimodule(&m, r.algebra().alpha(), r.alpha_w())?;
    let round_trip = &back == r;
    let outcome = combine([
        mr.outcome(),
        if round_trip {
            Outcome::Holds
        } else {
            Outcome::Fails
        },
    ]);
    Ok(CommandOutput::new(
        json!({
            "module": {
                "algebra": doc_value(m.algebra()),
                "dim_w": m.dim(),
                "rho_l": m.lambda_prime().iter().map(report::matrix).collect::<Vec<_>>(),
            },
            "module_checks": checks(&mr),
            "round_trip": round_trip,
        }),
        code_of(outcome),
    ))
}

fn irreducibility_value<F: Field>(i: &Irreducibility<F>) -> Value {
    match i {
        Irreducibility::Reducible(w) => {
            json!({ "verdict": i.label(), "submodule": report::subspace(w) })
        }
        _ => json!({ "verdict": i.label() }),
    }
}

fn bimodule_analyze<F: Field>(r: &BimoduleRep<F>, g: &GlobalOptions) -> Res {
    let opts = g.search();
    let mut body = json!({
        "dim_w": r.dim(),
        "checks": checks(&check_bimodule(r)),
        "equivariance": checks(&check_equivariance(r)),
        "alpha_w_invertible": r.alpha_w().is_invertible(),
    });
    body["irreducibility"] = match is_irreducible(r, &opts) {
        Ok(i) => irreducibility_value(&i),
        Err(e) => unavailable(e),
    };
    body["kernel_image"] = match kernel_image_analysis(r) {
        Ok(k) => json!({
            "kernel": report::subspace(&k.kernel),
            "image": report::subspace(&k.image),
            "induced_map": report::matrix(&k.induced_map),
            "checks": checks(&k.report),
            "untwisted_intertwining": k.untwisted_intertwining,
        }),
        Err(e) => unavailable(e),
    };
    body["irreducibility_transfer"] = match irreducibility_transfer_check(r, &opts) {
        Ok(t) => json!({
            "bimodule": irreducibility_value(&t.bimodule),
            "module": t.module.as_ref().map(irreducibility_value),
            "checks": checks(&t.report),
        }),
        Err(e) => unavailable(e),
    };
    Ok(CommandOutput::new(body, 0))
}
