use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use jordan_atlas::catalog::{build, build_violations, CanonicalSpec, SpinEmbedding};
use jordan_atlas::error::Error;
use jordan_atlas::invariants::{
    are_conjugate, count_formula_parts, discrepancy, enumerate_classes, invariant_vector, CountClause,
};
use jordan_atlas::jordan::{AmbientKind, TypeLabel};
use jordan_atlas::verify::{run_verify, VerifyConfig, VerifyLevel};
use serde_json::{json, Value};

const EXIT_VALIDATION: u8 = 2;
const EXIT_INVARIANT: u8 = 3;

#[derive(Parser)]
#[command(name = "jatlas", version, about = "Canonical maximal Jordan subalgebras, invariants and class counts")]
struct Cli {
    /// Write JSON here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Default directory for output files when `--out` is absent.
    #[arg(long, global = true, env = "JATLAS_OUT_DIR", hide_env_values = true)]
    out_dir: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the basis of a canonical subalgebra.
    Build {
        /// Spec as a JSON file path or inline JSON; otherwise taken from flags.
        spec: Option<String>,
        #[command(flatten)]
        flags: SpecFlags,
    },
    /// Enumerate conjugacy classes of one type and compare with the closed-form count.
    Classify {
        #[command(flatten)]
        target: TypeFlags,
    },
    /// Decide conjugacy of two specs in one ambient.
    Conjugate {
        /// First spec (path or inline JSON).
        a: String,
        /// Second spec (path or inline JSON).
        b: String,
    },
    /// Run the self-check suites.
    Verify {
        #[arg(long, value_enum, default_value = "quick")]
        level: Level,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Full,
    Sym,
    Symp,
}

impl Kind {
    fn name(self) -> &'static str {
        match self {
            Self::Full => "full",
            Self::Sym => "sym",
            Self::Symp => "symp",
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum TypeKind {
    Full,
    Sym,
    Symp,
    Spin,
}

#[derive(Clone, Copy, ValueEnum)]
enum Embedding {
    First,
    Second,
}

#[derive(Clone, Copy, ValueEnum)]
enum Level {
    Quick,
    Full,
}

#[derive(Args)]
struct TypeFlags {
    /// Ambient kind.
    #[arg(long, value_enum)]
    ambient: Option<Kind>,
    /// Ambient matrix order.
    #[arg(long)]
    n: Option<usize>,
    /// Subalgebra type.
    #[arg(long = "type", value_enum)]
    ty: Option<TypeKind>,
    /// Type parameter: `m` of F_m, H(F_m) or H(F_2m, j).
    #[arg(long)]
    m: Option<usize>,
    /// Dimension `d` of the spin factor's vector part.
    #[arg(long)]
    spin_dim: Option<usize>,
}

#[derive(Args)]
struct SpecFlags {
    #[command(flatten)]
    target: TypeFlags,
    /// Plain copies.
    #[arg(long, default_value_t = 1)]
    l: usize,
    /// Transposed or paired copies.
    #[arg(long, default_value_t = 0)]
    k: usize,
    /// Spin embedding type; defaults from the parity of `d`.
    #[arg(long, value_enum)]
    embedding: Option<Embedding>,
}

/// A failure with its exit status.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Self {
            code: if e.is_validation() { EXIT_VALIDATION } else { EXIT_INVARIANT },
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_VALIDATION,
        message: message.into(),
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

impl TypeFlags {
    fn ambient(&self) -> CliResult<AmbientKind> {
        let kind = self.ambient.ok_or_else(|| usage("--ambient is required"))?;
        let n = self.n.ok_or_else(|| usage("--n is required"))?;
        Ok(AmbientKind::from_parts(kind.name(), n)?)
    }

    fn type_label(&self) -> CliResult<TypeLabel> {
        let ty = self.ty.ok_or_else(|| usage("--type is required"))?;
        let param = |name: &str, v: Option<usize>| v.ok_or_else(|| usage(format!("{name} is required")));
        Ok(match ty {
            TypeKind::Full => TypeLabel::FullPlus(param("--m", self.m)?),
            TypeKind::Sym => TypeLabel::SymmetricH(param("--m", self.m)?),
            TypeKind::Symp => TypeLabel::SymplecticH(param("--m", self.m)?),
            TypeKind::Spin => TypeLabel::Spin(param("--spin-dim", self.spin_dim.or(self.m))?),
        })
    }
}

impl SpecFlags {
    fn spec(&self) -> CliResult<CanonicalSpec> {
        let ambient = self.target.ambient()?;
        let mut spec = match self.target.type_label()? {
            TypeLabel::Spin(d) => CanonicalSpec::spin(ambient, d, self.l, self.k),
            ty => CanonicalSpec::matrix(ambient, ty, self.l, self.k),
        };
        if let Some(e) = self.embedding {
            spec.spin_embedding = Some(match e {
                Embedding::First => SpinEmbedding::FirstType,
                Embedding::Second => SpinEmbedding::SecondType,
            });
        }
        Ok(spec)
    }
}

/// Inline JSON when the argument starts with `{`, otherwise a file path.
fn read_spec(arg: &str) -> CliResult<CanonicalSpec> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        fs::read_to_string(arg).map_err(|e| usage(format!("cannot read {arg}: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| usage(format!("cannot parse spec: {e}")))
}

fn formula_json(ambient: AmbientKind, ty: TypeLabel) -> Value {
    match count_formula_parts(ambient, ty) {
        None => Value::Null,
        Some((clause, k, count)) => json!({
            "clause": match clause {
                CountClause::Linear => "linear",
                CountClause::HalfSum => "half_sum",
            },
            "k": k,
            "count": count,
        }),
    }
}

fn run(command: &Command) -> CliResult<(Value, u8)> {
    match command {
        Command::Build { spec, flags } => {
            let spec = match spec {
                Some(arg) => read_spec(arg)?,
                None => flags.spec()?,
            };
            let violations = build_violations(&spec);
            if !violations.is_empty() {
                return Err(Error::SpecInvalid(violations).into());
            }
            Ok((serde_json::to_value(build(&spec)?).expect("serializable"), 0))
        }
        Command::Classify { target } => {
            let ambient = target.ambient()?;
            let ty = target.type_label()?;
            let atlas = enumerate_classes(ambient, ty);
            let value = json!({
                "ambient": ambient,
                "type": ty.kind_name(),
                "m": ty.param(),
                "entries": atlas.entries,
                "enumerated_count": atlas.entries.len(),
                "formula": formula_json(ambient, ty),
                "discrepancy": discrepancy(ambient, ty),
            });
            Ok((value, 0))
        }
        Command::Conjugate { a, b } => {
            let (a, b) = (read_spec(a)?, read_spec(b)?);
            let verdict = are_conjugate(&a, &b)?;
            let value = json!({
                "conjugate": verdict,
                "invariants_a": invariant_vector(&a),
                "invariants_b": invariant_vector(&b),
            });
            Ok((value, 0))
        }
        Command::Verify { level, seed } => {
            let level = match level {
                Level::Quick => VerifyLevel::Quick,
                Level::Full => VerifyLevel::Full,
            };
            let report = run_verify(&VerifyConfig::new(level, *seed));
            let code = if report.passed() { 0 } else { EXIT_INVARIANT };
            Ok((serde_json::to_value(&report).expect("serializable"), code))
        }
    }
}

fn command_name(command: &Command) -> &'static str {
    match command {
        Command::Build { .. } => "build",
        Command::Classify { .. } => "classify",
        Command::Conjugate { .. } => "conjugate",
        Command::Verify { .. } => "verify",
    }
}

fn emit(value: &Value, target: Option<&Path>) -> CliResult<()> {
    let text = serde_json::to_string_pretty(value).expect("serializable") + "\n";
    match target {
        None => print!("{text}"),
        Some(path) => {
            if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
                fs::create_dir_all(dir).map_err(|e| usage(format!("cannot create {}: {e}", dir.display())))?;
            }
            fs::write(path, text).map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let target = cli
        .out
        .clone()
        .or_else(|| cli.out_dir.as_ref().map(|d| d.join(format!("{}.json", command_name(&cli.command)))));
    let outcome = run(&cli.command).and_then(|(value, code)| emit(&value, target.as_deref()).map(|()| code));
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
