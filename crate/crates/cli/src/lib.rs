//! File formats, reports and the command surface of the `homjordan` tool.

pub mod commands;
pub mod discrepancy;
pub mod document;
pub mod oracle;
pub mod report;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

pub use document::{
    parse_algebra, serialize_algebra, AlgebraDocument, BimoduleDocument, DocumentError, FieldSpec,
};

/// Runs `$body` with `$F` bound to the scalar type named by a [`FieldSpec`].
/// Prime fields below 100 are supported.
#[macro_export]
macro_rules! with_field {
    ($spec:expr, |$F:ident| $body:expr) => {{
        match $spec {
            $crate::document::FieldSpec::Q => {
                type $F = homjordan::Rational;
                $body
            }
            $crate::document::FieldSpec::GF { p } => {
                $crate::with_field!(@primes p, $F, $body,
                    2 3 5 7 11 13 17 19 23 29 31 37 41 43 47 53 59 61 67 71 73 79 83 89 97)
            }
        }
    }};
    (@primes $p:ident, $F:ident, $body:expr, $($q:literal)*) => {
        match $p {
            $($q => {
                type $F = homjordan::Fp<$q>;
                $body
            })*
            other => Err($crate::CliError::Usage(format!(
                "unsupported field GF({other}): prime fields below 100 are supported"
            ))),
        }
    };
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Document(#[from] DocumentError),
    #[error(transparent)]
    Math(#[from] homjordan::Error),
}

impl CliError {
    /// Malformed input, unsupported fields and exhausted budgets give 2;
    /// a violated mathematical precondition gives 1.
    pub fn exit_code(&self) -> i32 {
        use homjordan::Error as E;
        match self {
            CliError::Usage(_) | CliError::Document(_) => 2,
            CliError::Math(
                E::Parse(_)
                | E::DimensionMismatch(_)
                | E::UnsupportedCharacteristic(_)
                | E::BudgetExceeded { .. }
                | E::Unsupported(_),
            ) => 2,
            CliError::Math(_) => 1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, Args)]
pub struct GlobalOptions {
    /// Seed for every randomized search.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Random trials per search.
    #[arg(long, global = true, default_value_t = 64)]
    pub trials: usize,
    /// Largest number of vectors or subspaces an exhaustive search may visit.
    #[arg(long, global = true, default_value_t = homjordan::exactla::enumerate::DEFAULT_BUDGET)]
    pub budget: u128,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

impl GlobalOptions {
    pub fn search(&self) -> homjordan::SearchOptions {
        homjordan::SearchOptions {
            seed: self.seed,
            trials: self.trials,
            budget: self.budget,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "homjordan",
    version,
    about = "Exact verification and structure theory for Hom-Jordan algebras"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOptions,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyKind {
    Dim1,
    Dim2,
    Cyclic,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Commutativity, the Hom-Jordan identity and multiplicativity.
    Verify { file: String },
    /// Derived series, kernel and image of the twist, radical, decomposition,
    /// simplicity and semisimplicity.
    Analyze { file: String },
    /// The induced Jordan algebra `(V, α⁻¹∘μ)`.
    Induced { file: String },
    /// Yau twist of a Jordan algebra by an endomorphism.
    Twist {
        file: String,
        /// JSON matrix file (column convention).
        #[arg(long)]
        alpha: String,
    },
    /// Quotient by the Hom-ideal generated by the given vectors.
    Quotient {
        file: String,
        /// Vectors as `1,0,2;0,1,1`.
        #[arg(long = "ideal-gens")]
        ideal_gens: String,
    },
    /// Splitting `V ≅ V/Ker α ⊕ Ker α` for an idempotent twist map.
    Split { file: String },
    /// Emits a member of one of the example families.
    Family {
        #[arg(long, value_enum)]
        kind: FamilyKind,
        /// `Q` or `GF(p)`.
        #[arg(long, default_value = "Q")]
        field: String,
        /// Twist scalar of the one-dimensional family.
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        k: String,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        p: String,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        q: String,
        /// Dimension of the cyclic family.
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// `identity`, `shift`, `zero` or a matrix file, for the cyclic family.
        #[arg(long, default_value = "identity")]
        alpha: String,
        /// Print only the algebra document.
        #[arg(long)]
        raw: bool,
    },
    /// Classification signature of a simple multiplicative algebra.
    Signature { file: String },
    /// Compares two algebras; `--search` enumerates ideal maps over a finite
    /// field, `--m1` lifts a given ideal isomorphism.
    Iso {
        file_a: String,
        file_b: String,
        #[arg(long)]
        search: bool,
        #[arg(long)]
        m1: Option<String>,
    },
    /// Bimodule commands.
    Bimodule {
        #[command(subcommand)]
        action: BimoduleAction,
    },
    /// Verdicts on the example families next to the claimed properties.
    DiscrepancyLog,
}

#[derive(Debug, Subcommand)]
pub enum BimoduleAction {
    /// The two compatibility identities and equivariance.
    Verify { algebra: String, module: String },
    /// Transport to a module of the induced Jordan algebra and back.
    Transport { algebra: String, module: String },
    /// Irreducibility, kernel and image of the module twist, and the
    /// irreducibility transfer.
    Analyze { algebra: String, module: String },
}

/// Everything a run produces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Execution {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// A command's report body and exit code.
pub struct CommandOutput {
    pub body: Value,
    pub code: i32,
    /// Printed verbatim instead of the report (used by `family --raw`).
    pub raw: Option<String>,
}

impl CommandOutput {
    pub fn new(body: Value, code: i32) -> Self {
        CommandOutput {
            body,
            code,
            raw: None,
        }
    }
}

pub fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Verify { .. } => "verify",
        Command::Analyze { .. } => "analyze",
        Command::Induced { .. } => "induced",
        Command::Twist { .. } => "twist",
        Command::Quotient { .. } => "quotient",
        Command::Split { .. } => "split",
        Command::Family { .. } => "family",
        Command::Signature { .. } => "signature",
        Command::Iso { .. } => "iso",
        Command::Bimodule { action } => match action {
            BimoduleAction::Verify { .. } => "bimodule verify",
            BimoduleAction::Transport { .. } => "bimodule transport",
            BimoduleAction::Analyze { .. } => "bimodule analyze",
        },
        Command::DiscrepancyLog => "discrepancy-log",
    }
}

/// Parses `args` (without the program name) and runs the command.
pub fn run<I, S>(args: I) -> Execution
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args: Vec<String> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(
        std::iter::once("homjordan".to_string()).chain(args.iter().cloned()),
    ) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Execution {
                    stdout: text,
                    stderr: String::new(),
                    code,
                }
            } else {
                Execution {
                    stdout: String::new(),
                    stderr: text,
                    code,
                }
            };
        }
    };
    let g = cli.global;
    let mut header = json!({
        "command": command_name(&cli.command),
        "arguments": args,
        "seed": g.seed,
        "trials": g.trials,
        "budget": g.budget.to_string(),
    });
    let (body, code, raw, stderr) = match commands::execute(&cli.command, &g) {
        Ok(out) => (out.body, out.code, out.raw, String::new()),
        Err(e) => {
            let code = e.exit_code();
            (
                json!({ "status": "error", "error": e.to_string() }),
                code,
                None,
                format!("error: {e}\n"),
            )
        }
    };
    if let Some(raw) = raw {
        return Execution {
            stdout: raw,
            stderr,
            code,
        };
    }
    let obj = header.as_object_mut().expect("header is an object");
    if let Value::Object(b) = body {
        obj.extend(b);
    }
    obj.insert("exit_code".into(), json!(code));
    let stdout = match g.format {
        Format::Json => report::render_json(&header),
        Format::Text => report::render_text(&header),
    };
    Execution {
        stdout,
        stderr,
        code,
    }
}
