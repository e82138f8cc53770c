use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use pct_cli::verify::Status;
use pct_cli::{discrepancy, transform, verify, CliError, RunConfig};

/// Build and check position-dependent-mass systems from a JSON config.
#[derive(Parser)]
#[command(name = "pct", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate x, m, f, V and the target states, plus the spectrum.
    Transform(Io),
    /// Compare closed-form levels with the effective-mass solver.
    Verify(Io),
    /// Audit the pipeline against the hand-reduced closed-form target potentials.
    Discrepancy(Io),
}

#[derive(Args)]
struct Io {
    /// Path to the JSON config.
    config: PathBuf,
    /// Output file; overrides `output.path` in the config.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

fn load(path: &Path) -> Result<RunConfig, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_path_buf(),
        source,
    })?;
    RunConfig::from_json(&text)
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    let (io, cmd) = match &cli.command {
        Command::Transform(io) => (io, 0),
        Command::Verify(io) => (io, 1),
        Command::Discrepancy(io) => (io, 2),
    };
    let cfg = load(&io.config)?;
    let out = io.output.clone().or_else(|| cfg.output.path.clone());
    let out = out.as_deref();
    match cmd {
        0 => transform::run(&cfg, out)?,
        1 => {
            if verify::run(&cfg, out)? == Status::Fail {
                return Ok(ExitCode::from(1));
            }
        }
        _ => discrepancy::run(&cfg, out)?,
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
