//! Machine-readable reports. Every report is a `serde_json::Value` with sorted
//! keys; the text format is a rendering of the same value.

use homjordan::algebra_core::{Outcome, Verdict, VerificationReport, Witness};
use homjordan::{Field, Matrix, Poly, SimilarityInvariant, Subspace};
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

pub fn scalar<F: Field>(x: &F) -> Value {
    Value::String(x.to_string())
}

pub fn vector<F: Field>(v: &[F]) -> Value {
    Value::Array(v.iter().map(scalar).collect())
}

pub fn matrix<F: Field>(m: &Matrix<F>) -> Value {
    Value::Array((0..m.rows()).map(|r| vector(m.row(r))).collect())
}

pub fn subspace<F: Field>(s: &Subspace<F>) -> Value {
    json!({
        "dim": s.dim(),
        "basis": Value::Array(s.basis_vectors().iter().map(|v| vector(v)).collect()),
    })
}

pub fn poly<F: Field>(p: &Poly<F>) -> Value {
    json!({
        "coefficients": vector(p.coeffs()),
        "display": p.to_string(),
    })
}

pub fn similarity<F: Field>(s: &SimilarityInvariant<F>) -> Value {
    Value::Array(s.invariant_factors.iter().map(poly).collect())
}

pub fn outcome_label(o: Outcome) -> &'static str {
    match o {
        Outcome::Holds => "holds",
        Outcome::Fails => "fails",
        Outcome::Undecidable => "undecidable",
    }
}

pub fn witness<F: Field>(w: &Witness<F>) -> Value {
    let inputs: Map<String, Value> = w
        .inputs
        .iter()
        .map(|(k, v)| (k.clone(), vector(v)))
        .collect();
    let mut out = Map::new();
    out.insert("inputs".into(), Value::Object(inputs));
    out.insert("lhs".into(), vector(&w.lhs));
    out.insert("rhs".into(), vector(&w.rhs));
    if let Some(n) = &w.note {
        out.insert("note".into(), Value::String(n.clone()));
    }
    Value::Object(out)
}

pub fn verdict<F: Field>(v: &Verdict<F>) -> Value {
    match v {
        Verdict::Holds => json!({ "verdict": "holds" }),
        Verdict::Fails(w) => json!({ "verdict": "fails", "witness": witness(w) }),
        Verdict::Undecidable(reason) => json!({ "verdict": "undecidable", "reason": reason }),
    }
}

/// `{name: verdict, ...}`; check names are unique within a report.
pub fn checks<F: Field>(r: &VerificationReport<F>) -> Value {
    Value::Object(
        r.checks
            .iter()
            .map(|c| (c.name.clone(), verdict(&c.verdict)))
            .collect(),
    )
}

/// Worst outcome first: a failure outranks undecidability.
pub fn combine(outcomes: impl IntoIterator<Item = Outcome>) -> Outcome {
    let mut acc = Outcome::Holds;
    for o in outcomes {
        match (acc, o) {
            (_, Outcome::Fails) => acc = Outcome::Fails,
            (Outcome::Holds, Outcome::Undecidable) => acc = Outcome::Undecidable,
            _ => {}
        }
    }
    acc
}

/// SHA-256 over the inputs, each prefixed by its byte length.
pub fn digest(inputs: &[&[u8]]) -> String {
    let mut h = Sha256::new();
    for bytes in inputs {
        h.update((bytes.len() as u64).to_le_bytes());
        h.update(bytes);
    }
    hex::encode(h.finalize())
}

fn render_into(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                match x {
                    Value::Object(inner) if !inner.is_empty() => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_into(x, indent + 1, out);
                    }
                    Value::Array(items) if items.iter().any(|i| i.is_object()) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        for (idx, item) in items.iter().enumerate() {
                            out.push_str(&format!("{pad}  [{idx}]\n"));
                            render_into(item, indent + 2, out);
                        }
                    }
                    _ => out.push_str(&format!("{pad}{k}: {}\n", inline(x))),
                }
            }
        }
        _ => out.push_str(&format!("{pad}{}\n", inline(v))),
    }
}

fn inline(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => format!(
            "[{}]",
            items.iter().map(inline).collect::<Vec<_>>().join(", ")
        ),
        Value::Object(m) if m.is_empty() => "{}".into(),
        other => other.to_string(),
    }
}

pub fn render_text(v: &Value) -> String {
    let mut out = String::new();
    render_into(v, 0, &mut out);
    out
}

pub fn render_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use homjordan::Rational;

    #[test]
    fn combine_prefers_failure() {
        use Outcome::*;
        assert_eq!(combine([Holds, Undecidable, Fails]), Fails);
        assert_eq!(combine([Holds, Undecidable]), Undecidable);
        assert_eq!(combine([]), Holds);
    }

    #[test]
    fn digest_separates_inputs() {
        assert_ne!(digest(&[b"ab", b"c"]), digest(&[b"a", b"bc"]));
        assert_eq!(digest(&[b"x"]).len(), 64);
    }

    #[test]
    fn text_rendering() {
        let v = json!({"b": {"verdict": "holds"}, "a": [1, 2], "c": [{"x": "1/2"}]});
        assert_eq!(
            render_text(&v),
            "a: [1, 2]\nb:\n  verdict: holds\nc:\n  [0]\n    x: 1/2\n"
        );
        let q: Verdict<Rational> = Verdict::Undecidable("budget".into());
        assert_eq!(verdict(&q)["verdict"], "undecidable");
    }
}
