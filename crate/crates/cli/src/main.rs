//! `quotcoh` — evaluates closed-form predictions for cohomology and
//! extension groups of tautological bundles on punctual Quot schemes of
//! smooth projective curves, from a JSON config of queries.

mod config;
mod dispatch;
mod error;
mod output;
mod verify;

use std::io::Write;
use std::panic::AssertUnwindSafe;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use quotcoh_core::CohPolicy;

use crate::error::CliError;
use crate::output::{Format, RenderOptions};

#[derive(Parser)]
#[command(name = "quotcoh", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Execute the queries of a JSON config file.
    Run(RunArgs),
    /// Cross-check the graded powers against the enumeration oracle and the
    /// formula family against its proven specializations.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct RunArgs {
    /// Path to the JSON config.
    config: PathBuf,
    /// Output format.
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Override the config's cohomology policy.
    #[arg(long, value_enum)]
    policy: Option<PolicyArg>,
    /// Write the output to a file instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Include a timestamp in the output (off by default so that identical
    /// inputs produce byte-identical output).
    #[arg(long)]
    timestamps: bool,
}

#[derive(Clone, Copy, Debug, clap::ValueEnum)]
enum PolicyArg {
    Strict,
    Generic,
}

impl From<PolicyArg> for CohPolicy {
    fn from(p: PolicyArg) -> Self {
        match p {
            PolicyArg::Strict => CohPolicy::Strict,
            PolicyArg::Generic => CohPolicy::Generic,
        }
    }
}

#[derive(Args)]
struct VerifyArgs {
    /// Maximum total dimension for the oracle sweep (at most 12).
    #[arg(long = "max-dim", default_value_t = 5)]
    max_dim: usize,
    /// Maximum power for the oracle sweep (at most 12).
    #[arg(long = "max-k", default_value_t = 5)]
    max_k: usize,
    /// Seed for the randomized identity checks.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the report to a file instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

fn run_command(args: &RunArgs) -> Result<String, CliError> {
    let text = std::fs::read_to_string(&args.config)
        .map_err(|e| CliError::config(format!("cannot read {}: {e}", args.config.display())))?;
    let parsed = config::parse(&text)?;
    let resolved = config::resolve(parsed, args.policy.map(CohPolicy::from))?;
    let outcomes = dispatch::execute(&resolved)?;
    let policy = match resolved.policy {
        CohPolicy::Strict => "strict",
        CohPolicy::Generic => "generic",
    };
    let opts = RenderOptions {
        format: args.format,
        timestamp: args.timestamps.then(|| {
            std::time::SystemTime::now()
                .duration_since(std::time::UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0)
        }),
    };
    Ok(output::render(
        &outcomes,
        resolved.curve.genus,
        policy,
        &opts,
    ))
}

fn write_output(text: &str, path: &Option<PathBuf>) -> Result<(), CliError> {
    match path {
        Some(path) => std::fs::write(path, text).map_err(|e| CliError::Failure {
            message: format!("cannot write {}: {e}", path.display()),
        }),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .map_err(|e| CliError::Failure {
                    message: format!("cannot write to stdout: {e}"),
                })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = std::panic::catch_unwind(AssertUnwindSafe(|| match &cli.command {
        Command::Run(args) => run_command(args).and_then(|text| write_output(&text, &args.output)),
        Command::Verify(args) => verify::run(args.max_dim, args.max_k, args.seed)
            .and_then(|text| write_output(&text, &args.output)),
    }));
    match result {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(err)) => {
            eprintln!("{err}");
            ExitCode::from(err.exit_code())
        }
        Err(panic) => {
            let message = panic
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| panic.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".to_string());
            eprintln!("internal invariant failure: {message}");
            ExitCode::from(1)
        }
    }
}
