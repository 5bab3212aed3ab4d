use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cliffalg_core::involutions::{
    clifford_conjugate, complex_conjugate, dagger, grade_involution, reversion, scalar_product,
};
use cliffalg_core::json::{multivector_from_str, multivector_to_string};
use cliffalg_core::verify::{verify, Suite, VerifyOptions};
use cliffalg_core::{
    com_bracket, hodge_star, preset_ideal_basis, CliffordError, Multivector, Preset,
    Representation, Signature, DEFAULT_EPS,
};
use serde_json::json;

const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_MISMATCH: u8 = 3;

#[derive(Parser)]
#[command(name = "cliffalg", version, about = "Clifford algebra Cl(p,q) calculator and checker")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the matrices gamma(e^1) .. gamma(e^n).
    Repr(ReprArgs),
    /// Print the idempotent and ideal basis behind a representation.
    Basis(ReprArgs),
    /// Run a seeded verification suite.
    Verify(VerifyArgs),
    /// Apply an operation to JSON multivectors.
    Apply(ApplyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Pretty,
}

#[derive(Args)]
struct Common {
    /// Output format.
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Tolerance; overrides CLIFFALG_EPS.
    #[arg(long)]
    eps: Option<f64>,
}

#[derive(Args)]
struct ReprArgs {
    /// Signature as `p,q`.
    #[arg(long)]
    signature: String,
    /// standard, paper, dirac or block.
    #[arg(long, default_value = "paper")]
    preset: String,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct VerifyArgs {
    /// 1-8, golden, unitary, normal or spectral.
    #[arg(long, alias = "suite")]
    theorem: String,
    #[arg(long, conflicts_with = "all", required_unless_present = "all")]
    signature: Option<String>,
    /// Run over every signature the suite covers.
    #[arg(long)]
    all: bool,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads; the report does not depend on this.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct ApplyArgs {
    /// Operation; may also be given as the first positional argument.
    #[arg(long)]
    op: Option<String>,
    /// Grade for `grade`.
    #[arg(long)]
    grade: Option<usize>,
    /// Write the result here instead of stdout.
    #[arg(long, short)]
    output: Option<PathBuf>,
    /// Input JSON files; `-` reads stdin.
    inputs: Vec<String>,
    #[command(flatten)]
    common: Common,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<CliffordError> for Failure {
    fn from(e: CliffordError) -> Self {
        let code = match e {
            CliffordError::SignatureMismatch { .. } => EXIT_MISMATCH,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

fn resolve_eps(flag: Option<f64>) -> Result<f64, Failure> {
    let eps = match flag {
        Some(e) => e,
        None => match std::env::var("CLIFFALG_EPS") {
            Ok(s) => s
                .trim()
                .parse()
                .map_err(|_| usage(format!("CLIFFALG_EPS is not a number: `{s}`")))?,
            Err(_) => DEFAULT_EPS,
        },
    };
    if !(eps > 0.0 && eps.is_finite()) {
        return Err(usage(format!("tolerance must be positive, got {eps}")));
    }
    Ok(eps)
}

fn representation(args: &ReprArgs) -> Result<Representation, Failure> {
    let sig: Signature = args.signature.parse()?;
    let preset: Preset = args.preset.parse()?;
    Ok(Representation::new(preset_ideal_basis(&sig, preset)?))
}

fn to_json<T: serde::Serialize>(x: &T) -> String {
    serde_json::to_string(x).expect("serializable")
}

fn cmd_repr(args: &ReprArgs) -> Result<String, Failure> {
    let eps = resolve_eps(args.common.eps)?;
    let rep = representation(args)?;
    let sig = rep.basis().signature;
    Ok(match args.common.format {
        Format::Json => to_json(&json!({
            "signature": [sig.p(), sig.q()],
            "preset": rep.basis().preset,
            "d": rep.dim(),
            "gamma": rep.generators(),
        })),
        Format::Pretty => {
            let mut s = format!("Cl{sig}, preset {}, d = {}\n", rep.basis().preset, rep.dim());
            for (a, g) in rep.generators().iter().enumerate() {
                s += &format!("\ngamma(e^{}) =\n{}", a + 1, g.pretty(eps));
            }
            s
        }
    })
}

fn cmd_basis(args: &ReprArgs) -> Result<String, Failure> {
    resolve_eps(args.common.eps)?;
    let rep = representation(args)?;
    let basis = rep.basis();
    Ok(match args.common.format {
        Format::Json => to_json(basis),
        Format::Pretty => {
            let mut s = format!(
                "Cl{}, preset {}, d = {}\nt = {}\n",
                basis.signature,
                basis.preset,
                basis.dim(),
                basis.t
            );
            for (k, tau) in basis.taus.iter().enumerate() {
                s += &format!("tau_{} = {tau}\n", k + 1);
            }
            s
        }
    })
}

fn cmd_verify(args: &VerifyArgs) -> Result<(String, bool), Failure> {
    let suite: Suite = args.theorem.parse()?;
    let signature = args.signature.as_deref().map(str::parse::<Signature>).transpose()?;
    let opts = VerifyOptions {
        trials: args.trials,
        seed: args.seed,
        eps: resolve_eps(args.common.eps)?,
        jobs: args.jobs.max(1),
    };
    let report = verify(suite, signature, &opts)?;
    let text = match args.common.format {
        Format::Json => to_json(&report),
        Format::Pretty => report.pretty(),
    };
    Ok((text, report.passed()))
}

fn read_input(path: &str) -> Result<Multivector, Failure> {
    let text = if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| usage(format!("reading stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| usage(format!("reading {path}: {e}")))?
    };
    multivector_from_str(&text).map_err(|e| usage(format!("{path}: {e}")))
}

const UNARY_OPS: [&str; 8] = [
    "grade", "star", "dagger", "reverse", "involute", "conj", "cliffconj", "neg",
];
const BINARY_OPS: [&str; 8] = [
    "mul", "wedge", "add", "sub", "commutator", "anticommutator", "com", "scalar",
];

fn cmd_apply(args: &ApplyArgs) -> Result<String, Failure> {
    resolve_eps(args.common.eps)?;
    let mut inputs = args.inputs.as_slice();
    let op = match &args.op {
        Some(op) => op.as_str(),
        None => {
            let (first, rest) = inputs
                .split_first()
                .ok_or_else(|| usage("missing operation"))?;
            inputs = rest;
            first.as_str()
        }
    };
    let arity = if UNARY_OPS.contains(&op) {
        1
    } else if BINARY_OPS.contains(&op) {
        2
    } else {
        return Err(usage(format!(
            "unknown operation `{op}`; expected one of {}",
            [&UNARY_OPS[..], &BINARY_OPS[..]].concat().join(", ")
        )));
    };
    if inputs.len() != arity {
        return Err(usage(format!(
            "`{op}` takes {arity} input(s), got {}",
            inputs.len()
        )));
    }
    let xs: Vec<Multivector> = inputs.iter().map(|p| read_input(p)).collect::<Result<_, _>>()?;
    let u = &xs[0];
    let result = match op {
        "grade" => {
            let k = args.grade.ok_or_else(|| usage("`grade` needs --grade K"))?;
            u.grade_project(k)?
        }
        "star" => hodge_star(u),
        "dagger" => dagger(u),
        "reverse" => reversion(u),
        "involute" => grade_involution(u),
        "conj" => complex_conjugate(u),
        "cliffconj" => clifford_conjugate(u),
        "neg" => -u.clone(),
        "mul" => u.clifford_product(&xs[1])?,
        "wedge" => u.exterior_product(&xs[1])?,
        "add" => {
            u.ensure_same(&xs[1])?;
            u + &xs[1]
        }
        "sub" => {
            u.ensure_same(&xs[1])?;
            u - &xs[1]
        }
        "commutator" => u.commutator(&xs[1])?,
        "anticommutator" => u.anticommutator(&xs[1])?,
        "com" => com_bracket(u, &xs[1])?,
        "scalar" => {
            let c = scalar_product(u, &xs[1])?;
            return Ok(to_json(&json!({ "re": c.re, "im": c.im })));
        }
        _ => unreachable!("checked above"),
    };
    let text = multivector_to_string(&result);
    match args.common.format {
        Format::Json => Ok(text),
        Format::Pretty => Ok(format!("{result}")),
    }
}

fn write_out(text: &str, output: Option<&PathBuf>) -> Result<(), Failure> {
    match output {
        Some(path) => std::fs::write(path, format!("{text}\n"))
            .map_err(|e| usage(format!("writing {}: {e}", path.display()))),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<bool, Failure> {
    match cli.command {
        Command::Repr(a) => write_out(&cmd_repr(&a)?, None).map(|_| true),
        Command::Basis(a) => write_out(&cmd_basis(&a)?, None).map(|_| true),
        Command::Verify(a) => {
            let (text, passed) = cmd_verify(&a)?;
            write_out(&text, None)?;
            Ok(passed)
        }
        Command::Apply(a) => write_out(&cmd_apply(&a)?, a.output.as_ref()).map(|_| true),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_FAILURE),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
