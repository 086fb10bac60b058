//! `bernstein-lab`: analyze quadratic stochastic operators stored as JSON.

mod commands;
mod document;
mod error;
mod report;
mod text;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::commands::{GenerateArgs, SweepArgs};
use crate::document::OperatorDocument;
use crate::error::CliError;

/// Hard ceiling for `--max-n`.
const MAX_N_CAP: usize = 20;

#[derive(Parser)]
#[command(
    name = "bernstein-lab",
    version,
    about = "Exact analysis of quadratic stochastic operators"
)]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GlobalArgs {
    /// Write the output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Number of seeded random samples per sampled check.
    #[arg(long, global = true, default_value_t = 50)]
    samples: usize,
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    /// Largest accepted dimension.
    #[arg(long, global = true, default_value_t = 12,
          value_parser = clap::value_parser!(u64).range(1..=MAX_N_CAP as u64))]
    max_n: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    HardyWeinberg,
    Mendel,
    Unit,
    Constant,
    Emalgebra,
    Quadrille,
    Eqalgebra,
}

#[derive(Clone, Copy, ValueEnum)]
enum SweepFamily {
    Emalgebra,
    Eqalgebra,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Full analysis report of an operator file.
    Analyze { input: PathBuf },
    /// Type, regularity, normality and family recognition only.
    Classify { input: PathBuf },
    /// Every invariant face with its flags.
    Faces { input: PathBuf },
    /// Seeded and exhaustive checks of the weight, Bernstein and idempotent identities.
    CheckIdentities { input: PathBuf },
    /// Print the operator document of a family member.
    Generate {
        #[arg(value_enum)]
        family: Family,
        /// Dimension of `unit`, or of the barycentric `constant`.
        #[arg(long)]
        n: Option<usize>,
        /// Comma-separated simplex point of `constant`.
        #[arg(long)]
        c: Option<String>,
        /// Rank of `emalgebra`.
        #[arg(long)]
        m: Option<usize>,
        /// Marked pair `i,k`; repeat the flag or separate pairs with `;`.
        #[arg(long)]
        pairs: Vec<String>,
        /// Comma-separated alpha values, one per pair.
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
        /// Comma-separated beta values, one per pair.
        #[arg(long, allow_hyphen_values = true)]
        beta: Option<String>,
        #[arg(long)]
        nu: Option<usize>,
        #[arg(long = "nubar")]
        nu_bar: Option<usize>,
    },
    /// Generate and verify every point of a parameter grid.
    Sweep {
        #[arg(value_enum, default_value_t = SweepFamily::Both)]
        family: SweepFamily,
        /// Comma-separated ranks of the extended Mendel grid.
        #[arg(long, default_value = "2,3,4")]
        m: String,
        #[arg(long, default_value_t = 3)]
        max_delta: usize,
        /// Denominator bound of alpha and beta.
        #[arg(long, default_value_t = 8)]
        max_den: i64,
        /// Comma-separated side lengths of the extended quadrille grid.
        #[arg(long, default_value = "2,3,4")]
        nu: String,
    },
}

fn family_name(f: Family) -> &'static str {
    match f {
        Family::HardyWeinberg => "hardy-weinberg",
        Family::Mendel => "mendel",
        Family::Unit => "unit",
        Family::Constant => "constant",
        Family::Emalgebra => "emalgebra",
        Family::Quadrille => "quadrille",
        Family::Eqalgebra => "eqalgebra",
    }
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(value) = std::env::var("BERNSTEIN_LAB_THREADS") else {
        return Ok(());
    };
    let threads: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| {
            CliError::Schema(format!(
                "BERNSTEIN_LAB_THREADS must be a positive integer, got {value:?}"
            ))
        })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| CliError::Internal(e.to_string()))
}

fn render<T: serde::Serialize>(value: &T, format: Format) -> String {
    match format {
        Format::Json => commands::to_json(value),
        Format::Text => text::render(&serde_json::to_value(value).expect("reports serialize")),
    }
}

fn emit(out: Option<&Path>, body: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, body).map_err(|e| CliError::io(path, e)),
        None => {
            use std::io::Write;
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(body.as_bytes())
                .and_then(|()| stdout.flush())
                .map_err(|e| CliError::Io(format!("stdout: {e}")))
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    configure_threads()?;
    let g = &cli.global;
    let max_n = g.max_n as usize;
    let out = g.out.as_deref();
    match cli.command {
        Command::Analyze { input } => {
            let input = commands::load(&input, max_n)?;
            emit(
                out,
                &render(
                    &report::analysis(&input.tensor, input.provenance)?,
                    g.format,
                ),
            )
        }
        Command::Classify { input } => {
            let input = commands::load(&input, max_n)?;
            emit(
                out,
                &render(
                    &report::classification(&input.tensor, input.provenance)?,
                    g.format,
                ),
            )
        }
        Command::Faces { input } => {
            let input = commands::load(&input, max_n)?;
            emit(
                out,
                &render(&report::faces(&input.tensor, input.provenance)?, g.format),
            )
        }
        Command::CheckIdentities { input } => {
            let input = commands::load(&input, max_n)?;
            let rep = commands::check_identities(input, g.samples, g.seed)?;
            emit(out, &render(&rep, g.format))?;
            if rep.passed {
                Ok(())
            } else {
                Err(CliError::ChecksFailed(
                    "some identity checks have nonzero residuals".into(),
                ))
            }
        }
        Command::Generate {
            family,
            n,
            c,
            m,
            pairs,
            alpha,
            beta,
            nu,
            nu_bar,
        } => {
            let args = GenerateArgs {
                n,
                c,
                m,
                pairs,
                alpha,
                beta,
                nu,
                nu_bar,
            };
            let doc =
                OperatorDocument::from_tensor(&commands::generate(family_name(family), &args)?);
            emit(out, &render(&doc, g.format))
        }
        Command::Sweep {
            family,
            m,
            max_delta,
            max_den,
            nu,
        } => {
            let family = match family {
                SweepFamily::Emalgebra => "emalgebra",
                SweepFamily::Eqalgebra => "eqalgebra",
                SweepFamily::Both => "both",
            };
            let rep = commands::sweep(&SweepArgs {
                family: family.to_string(),
                m,
                max_delta,
                max_den,
                nu,
            })?;
            emit(out, &render(&rep, g.format))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("bernstein-lab: {e}");
            e.exit_code()
        }
    }
}
