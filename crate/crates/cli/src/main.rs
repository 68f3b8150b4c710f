mod enumerate;
mod error;
mod formulas;
mod gen;
mod grid;
mod output;
mod report;
mod solve;
mod verify;

use clap::{Parser, Subcommand, ValueEnum};
use error::CliError;
use grid::List;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser, Debug)]
#[command(
    name = "egstab",
    version,
    about = "Circumference and clique-count toolkit for small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Graph6,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a named construction or family and print graph6 lines.
    Gen(gen::GenArgs),
    /// Tabulate a closed-form bound over a parameter grid as CSV.
    Formulas(formulas::FormulaArgs),
    /// Run a solver on every graph of a graph6 file.
    Solve(solve::SolveArgs),
    /// Run verification suites.
    Verify(verify::VerifyArgs),
    /// List isomorphism classes of connected or 2-connected graphs.
    Enumerate(enumerate::EnumerateArgs),
    /// Convert, rerun, or recheck a saved report.
    Report(report::ReportArgs),
}

/// Output destination shared by the subcommands.
#[derive(clap::Args, Debug)]
pub struct OutArgs {
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Gen(a) => gen::run(a),
        Command::Formulas(a) => formulas::run(a),
        Command::Solve(a) => solve::run(a),
        Command::Verify(a) => verify::run(a),
        Command::Enumerate(a) => enumerate::run(a),
        Command::Report(a) => report::run(a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { error::USAGE } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("egstab: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

/// The values of an optional list flag, or `default`.
pub fn list_or(l: &Option<List>, default: &[usize]) -> Vec<usize> {
    l.as_ref().map_or_else(|| default.to_vec(), |l| l.0.clone())
}
