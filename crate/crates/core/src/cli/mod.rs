//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a verification or self-check fails,
//! 2 for usage and input errors.

mod check;
mod render;

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::catalog::{catalog_entries, catalog_get, series_get, verify_entry, VerifyReport};
use crate::cf::{evaluate, Backend, CFSpec};
use crate::generate::{sequences_to_cf, series_to_cf, SequencePair, SeriesSpec};
use crate::numerics::{format_rational, parse_rational, rat_to_decimal, DEFAULT_PRECISION};
use crate::transforms::{clear_denominators, equivalence_scale, negate, sign_flip, ScalarSequence};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "gcf", version, about = "Exact-arithmetic generalized continued fractions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a continued fraction at a given depth.
    Eval {
        #[command(flatten)]
        source: SpecSource,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        depth: u64,
        #[command(flatten)]
        backend: BackendArgs,
        /// Decimal digits to print.
        #[arg(long, default_value_t = 30)]
        digits: usize,
        #[arg(long)]
        json: bool,
    },
    /// Print A_n, B_n and A_n/B_n for n = 0..=depth.
    Convergents {
        #[command(flatten)]
        source: SpecSource,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        depth: u64,
        #[arg(long, default_value_t = 20)]
        digits: usize,
        #[arg(long)]
        json: bool,
    },
    /// Build a continued fraction whose convergents are a series' partial sums.
    FromSeries {
        /// Series file.
        #[arg(long = "in", value_name = "FILE", conflicts_with = "name", required_unless_present = "name")]
        input: Option<PathBuf>,
        /// Built-in series (leibniz, lange, pi_thirds).
        #[arg(long)]
        name: Option<String>,
        /// Number of terms to write out.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        terms: u64,
        /// Rescale to integer terms.
        #[arg(long, conflicts_with = "symbolic")]
        clear: bool,
        /// Emit the closed-form rule instead of explicit terms.
        #[arg(long)]
        symbolic: bool,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Recover terms from convergent numerator/denominator sequences.
    FromSequences {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Apply a value-preserving or negating transform.
    Transform {
        #[arg(long, value_enum)]
        op: TransformOp,
        #[command(flatten)]
        source: SpecSource,
        /// Terms to materialize (clear and scale).
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        depth: Option<u64>,
        /// Scalars c_1, c_2, ... as p/q (scale).
        #[arg(long, num_args = 1.., value_delimiter = ',', allow_hyphen_values = true)]
        scalars: Vec<String>,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Compare catalog expansions against reference constants.
    Verify {
        /// Catalog entry name.
        #[arg(required_unless_present = "all", conflicts_with = "all")]
        name: Option<String>,
        #[arg(long)]
        all: bool,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        depth: u64,
        /// Required matched digits.
        #[arg(long)]
        digits: usize,
        #[command(flatten)]
        backend: BackendArgs,
        #[arg(long)]
        json: bool,
    },
    /// List or show catalog entries.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Randomized self-check of the recurrence and transform identities.
    Check {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        cases: usize,
        #[arg(long, default_value_t = 15, value_parser = clap::value_parser!(u64).range(1..))]
        depth: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum CatalogAction {
    List {
        #[arg(long)]
        json: bool,
    },
    /// Print an entry's spec file.
    Show { name: String },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct SpecSource {
    /// Spec file.
    #[arg(long = "in", value_name = "FILE")]
    pub input: Option<PathBuf>,
    /// Catalog entry.
    #[arg(long)]
    pub name: Option<String>,
}

#[derive(Debug, Args)]
pub struct BackendArgs {
    #[arg(long, value_enum, default_value_t = BackendKind::Exact)]
    pub backend: BackendKind,
    /// Mantissa bits for the approx backend.
    #[arg(long, default_value_t = DEFAULT_PRECISION, value_parser = clap::value_parser!(u32).range(2..))]
    pub precision: u32,
}

impl BackendArgs {
    fn backend(&self) -> Backend {
        match self.backend {
            BackendKind::Exact => Backend::Exact,
            BackendKind::Approx => Backend::Approx { precision: self.precision },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BackendKind {
    Exact,
    Approx,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TransformOp {
    Negate,
    Signflip,
    Clear,
    Scale,
}

/// A usage error with the exit code it should produce (0 for `--help`).
#[derive(Debug)]
pub struct UsageError {
    pub message: String,
    pub exit_code: i32,
}

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for UsageError {}

fn usage(message: impl Into<String>) -> UsageError {
    UsageError { message: message.into(), exit_code: EXIT_USAGE }
}

/// Parses and validates a full argument vector (including the program name).
pub fn parse_args<I, T>(argv: I) -> Result<Command, UsageError>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv).map_err(|e| UsageError {
        message: e.render().to_string(),
        exit_code: if e.use_stderr() { EXIT_USAGE } else { EXIT_OK },
    })?;
    if let Command::Transform { op, depth, scalars, .. } = &cli.command {
        if matches!(op, TransformOp::Clear | TransformOp::Scale) && depth.is_none() {
            return Err(usage("error: --depth is required for --op clear and --op scale"));
        }
        if *op == TransformOp::Scale && scalars.is_empty() {
            return Err(usage("error: --scalars is required for --op scale"));
        }
        if *op != TransformOp::Scale && !scalars.is_empty() {
            return Err(usage("error: --scalars only applies to --op scale"));
        }
        for s in scalars {
            parse_rational(s).map_err(|e| usage(format!("error: --scalars: {e}")))?;
        }
    }
    Ok(cli.command)
}

type CliResult = Result<i32, Box<dyn std::error::Error>>;

/// Executes a command, writing results to `out` and diagnostics to `err`.
/// Returns the process exit code.
pub fn run(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match dispatch(cmd, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn load_spec(source: &SpecSource) -> Result<CFSpec, Box<dyn std::error::Error>> {
    match (&source.input, &source.name) {
        (Some(path), _) => {
            let text = fs::read_to_string(path)
                .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
            Ok(CFSpec::from_json(&text)?)
        }
        (None, Some(name)) => Ok(catalog_get(name)?.spec.clone()),
        (None, None) => Err("either --in or --name is required".into()),
    }
}

fn emit(text: &str, path: &Option<PathBuf>, out: &mut dyn Write) -> std::io::Result<()> {
    match path {
        Some(p) => fs::write(p, format!("{text}\n")),
        None => writeln!(out, "{text}"),
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> CliResult {
    match cmd {
        Command::Eval { source, depth, backend, digits, json } => {
            let spec = load_spec(&source)?;
            let report = evaluate(&spec, depth as usize, backend.backend())?;
            if json {
                writeln!(out, "{}", render::eval_json(&spec, &report, digits))?;
            } else {
                render::eval_table(out, &spec, &report, digits)?;
            }
            Ok(EXIT_OK)
        }
        Command::Convergents { source, depth, digits, json } => {
            let spec = load_spec(&source)?;
            let states = spec.states(depth as usize)?;
            render::convergents(out, &states, digits, json)?;
            Ok(EXIT_OK)
        }
        Command::FromSeries { input, name, terms, clear, symbolic, out: path } => {
            let series = match (input, name) {
                (Some(p), _) => {
                    let text = fs::read_to_string(&p)
                        .map_err(|e| format!("cannot read {}: {e}", p.display()))?;
                    SeriesSpec::from_json(&text)?
                }
                (None, Some(n)) => series_get(&n)?.0,
                (None, None) => return Err("either --in or --name is required".into()),
            };
            let spec = series_to_cf(&series)?;
            let spec = if clear {
                clear_denominators(&spec, terms as usize)?
            } else if symbolic {
                spec
            } else {
                CFSpec::new(spec.b0.clone(), crate::cf::TermRule::Explicit(spec.terms(terms as usize)?))
            };
            emit(&spec.to_json(), &path, out)?;
            Ok(EXIT_OK)
        }
        Command::FromSequences { input, out: path } => {
            let text = fs::read_to_string(&input)
                .map_err(|e| format!("cannot read {}: {e}", input.display()))?;
            let spec = sequences_to_cf(&SequencePair::from_json(&text)?)?;
            emit(&spec.to_json(), &path, out)?;
            Ok(EXIT_OK)
        }
        Command::Transform { op, source, depth, scalars, out: path } => {
            let spec = load_spec(&source)?;
            let depth = depth.unwrap_or(0) as usize;
            let result = match op {
                TransformOp::Negate => negate(&spec),
                TransformOp::Signflip => sign_flip(&spec),
                TransformOp::Clear => clear_denominators(&spec, depth)?,
                TransformOp::Scale => {
                    let values = scalars
                        .iter()
                        .map(|s| parse_rational(s))
                        .collect::<Result<Vec<_>, _>>()?;
                    equivalence_scale(&spec, &ScalarSequence::new(values), depth)?
                }
            };
            emit(&result.to_json(), &path, out)?;
            Ok(EXIT_OK)
        }
        Command::Verify { name, all, depth, digits, backend, json } => {
            let names: Vec<String> = if all {
                catalog_entries().iter().map(|e| e.name.clone()).collect()
            } else {
                vec![name.expect("clap requires a name without --all")]
            };
            let reports = verify_many(&names, depth as usize, backend.backend(), digits)?;
            if json {
                for r in &reports {
                    writeln!(out, "{}", serde_json::to_string(r)?)?;
                }
            } else {
                render::verify_table(out, &reports)?;
            }
            let failed = reports.iter().any(VerifyReport::is_hard_failure);
            Ok(if failed { EXIT_FAILED } else { EXIT_OK })
        }
        Command::Catalog { action: CatalogAction::List { json } } => {
            for e in catalog_entries() {
                if json {
                    let line = json!({
                        "name": e.name,
                        "status": e.status,
                        "target": e.target.to_string(),
                        "summary": e.summary,
                        "b0": format_rational(&e.spec.b0),
                        "errata": e.errata,
                    });
                    writeln!(out, "{line}")?;
                } else {
                    writeln!(out, "{:<30} {:<11} {:<16} {}", e.name, e.status, e.target.to_string(), e.summary)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Catalog { action: CatalogAction::Show { name } } => {
            writeln!(out, "{}", catalog_get(&name)?.spec.to_json())?;
            Ok(EXIT_OK)
        }
        Command::Check { seed, cases, depth } => {
            let summary = check::run(seed, cases, depth as usize);
            writeln!(out, "{summary}")?;
            Ok(if summary.failures == 0 { EXIT_OK } else { EXIT_FAILED })
        }
    }
}

/// Verifies entries concurrently; reports come back in input order.
fn verify_many(
    names: &[String],
    depth: usize,
    backend: Backend,
    digits: usize,
) -> Result<Vec<VerifyReport>, crate::catalog::CatalogError> {
    std::thread::scope(|scope| {
        let handles: Vec<_> = names
            .iter()
            .map(|n| scope.spawn(move || verify_entry(n, depth, backend, digits)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("verification thread panicked"))
            .collect()
    })
}

/// Renders a decimal of `r` for tables.
pub(crate) fn decimal(r: &crate::numerics::Rational, digits: usize) -> String {
    rat_to_decimal(r, digits).to_string()
}
