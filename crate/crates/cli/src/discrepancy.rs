//! The example-family grid: checker verdicts over ℚ and GF(5), the
//! brute-force oracle over GF(5), and the claim that every member
//! is a simple Hom-Jordan algebra.

use homjordan::algebra_core::{check_hom_jordan, check_multiplicative, CheckOptions};
use homjordan::constructions::{cyclic_shift, family_cyclic, family_dim1, family_dim2};
use homjordan::structure::is_simple;
use homjordan::{Field, Gf5, HomAlgebra, Matrix, Rational, SearchOptions, Simplicity};
use serde_json::{json, Value};

use crate::{oracle, CliError, CommandOutput, GlobalOptions};

pub const DIM1_K: [i64; 4] = [1, 2, 3, -1];
pub const DIM2_GRID: [i64; 5] = [-1, 0, 1, 2, 3];
pub const CYCLIC_N: [usize; 3] = [3, 4, 5];
pub const CYCLIC_ALPHA: [&str; 3] = ["identity", "shift", "zero"];

/// Which family member a cell describes, instantiated over any field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Member {
    Dim1 { k: i64 },
    Dim2 { p: i64, q: i64 },
    Cyclic { n: usize, alpha: &'static str },
}

impl Member {
    pub fn build<F: Field>(&self) -> HomAlgebra<F> {
        match self {
            Member::Dim1 { k } => family_dim1(F::from_i64(*k)),
            Member::Dim2 { p, q } => family_dim2(F::from_i64(*p), F::from_i64(*q)),
            Member::Cyclic { n, alpha } => {
                let a = match *alpha {
                    "identity" => Matrix::identity(*n),
                    "shift" => cyclic_shift(*n),
                    _ => Matrix::zeros(*n, *n),
                };
                family_cyclic(*n, a).expect("n ≥ 3")
            }
        }
    }

    fn params(&self) -> Value {
        match self {
            Member::Dim1 { k } => json!({ "family": "dim1", "k": k }),
            Member::Dim2 { p, q } => json!({ "family": "dim2", "p": p, "q": q }),
            Member::Cyclic { n, alpha } => json!({ "family": "cyclic", "n": n, "alpha": alpha }),
        }
    }
}

pub fn grid() -> Vec<Member> {
    let mut out: Vec<Member> = DIM1_K.iter().map(|&k| Member::Dim1 { k }).collect();
    for &p in &DIM2_GRID {
        for &q in &DIM2_GRID {
            out.push(Member::Dim2 { p, q });
        }
    }
    for &n in &CYCLIC_N {
        for &alpha in &CYCLIC_ALPHA {
            out.push(Member::Cyclic { n, alpha });
        }
    }
    out
}

/// One row of the log.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    pub member: Member,
    pub q_hom_jordan: bool,
    pub q_multiplicative: bool,
    /// `simple`, `not_simple`, `unsupported` or `error: ...`.
    pub q_simple: String,
    pub gf5_hom_jordan: bool,
    pub gf5_simple: Option<bool>,
    pub oracle_hom_jordan: Option<bool>,
    pub oracle_multiplicative: bool,
    pub oracle_simple: Option<bool>,
}

impl Cell {
    pub fn oracle_agreement(&self) -> bool {
        self.oracle_hom_jordan == Some(self.gf5_hom_jordan)
            && self.oracle_hom_jordan == Some(self.q_hom_jordan)
            && self.oracle_multiplicative == self.q_multiplicative
            && self.oracle_simple.is_some()
            && self.oracle_simple == self.gf5_simple
    }

    /// Claimed properties that the evidence contradicts. Over
    /// ℚ simplicity is only decided for multiplicative Hom-Jordan algebras; otherwise the
    /// GF(5) reduction stands in.
    pub fn claim_discrepancies(&self) -> Vec<String> {
        let mut out = Vec::new();
        if !self.q_hom_jordan {
            out.push("hom_jordan".to_string());
        }
        match self.q_simple.as_str() {
            "simple" => {}
            "not_simple" => out.push("simple".to_string()),
            _ => {
                if self.oracle_simple == Some(false) {
                    out.push("simple (over GF(5))".to_string());
                }
            }
        }
        out
    }
}

fn simple_label<F: Field>(a: &HomAlgebra<F>, opts: &SearchOptions) -> String {
    match is_simple(a, opts) {
        Ok(s) => s.label().to_string(),
        Err(e) => format!("error: {e}"),
    }
}

pub fn evaluate(member: &Member, opts: &SearchOptions) -> Cell {
    let check = CheckOptions {
        budget: opts.budget,
        ..CheckOptions::default()
    };
    let q: HomAlgebra<Rational> = member.build();
    let g: HomAlgebra<Gf5> = member.build();
    Cell {
        member: member.clone(),
        q_hom_jordan: check_hom_jordan(&q, check).holds(),
        q_multiplicative: check_multiplicative(&q).holds(),
        q_simple: simple_label(&q, opts),
        gf5_hom_jordan: check_hom_jordan(&g, check).holds(),
        gf5_simple: match is_simple(&g, opts) {
            Ok(Simplicity::Simple { .. }) => Some(true),
            Ok(Simplicity::NotSimple { .. }) => Some(false),
            _ => None,
        },
        oracle_hom_jordan: oracle::hom_jordan_holds(&g, opts.budget),
        oracle_multiplicative: oracle::multiplicative(&g),
        oracle_simple: oracle::simple(&g, opts.budget),
    }
}

pub fn cell_value(c: &Cell) -> Value {
    json!({
        "parameters": c.member.params(),
        "claim": { "hom_jordan": true, "simple": true },
        "q": {
            "hom_jordan": c.q_hom_jordan,
            "multiplicative": c.q_multiplicative,
            "simple": c.q_simple,
        },
        "gf5": { "hom_jordan": c.gf5_hom_jordan, "simple": c.gf5_simple },
        "oracle_gf5": {
            "hom_jordan": c.oracle_hom_jordan,
            "multiplicative": c.oracle_multiplicative,
            "simple": c.oracle_simple,
        },
        "oracle_agreement": c.oracle_agreement(),
        "claim_discrepancies": c.claim_discrepancies(),
    })
}

pub fn run(g: &GlobalOptions) -> Result<CommandOutput, CliError> {
    let opts = g.search();
    let cells: Vec<Cell> = grid().iter().map(|m| evaluate(m, &opts)).collect();
    let disagreements = cells.iter().filter(|c| !c.oracle_agreement()).count();
    let discrepancies = cells
        .iter()
        .filter(|c| !c.claim_discrepancies().is_empty())
        .count();
    let body = json!({
        "status": "ok",
        "cells": cells.iter().map(cell_value).collect::<Vec<_>>(),
        "summary": {
            "cells": cells.len(),
            "oracle_disagreements": disagreements,
            "cells_contradicting_claim": discrepancies,
        },
    });
    Ok(CommandOutput::new(
        body,
        if disagreements == 0 { 0 } else { 1 },
    ))
}
