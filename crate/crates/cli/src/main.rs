use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use eqidx_cli::problem::ProblemSpec;
use eqidx_cli::{compute_report, run_suite, CliError, Suite, VerifyOptions, Which};
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "eqidx",
    version,
    about = "Equivariant indices of invariant 1-forms"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the index of the form in a problem file.
    Index {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Which::Both)]
        which: Which,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Check this problem instead of the built-in cases.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of generated cases.
        #[arg(long)]
        cases: Option<usize>,
    },
}

fn print<T: Serialize>(value: &T) -> Result<(), CliError> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn run(cli: Cli) -> Result<bool, CliError> {
    match cli.command {
        Command::Index { input, which } => {
            let problem = ProblemSpec::load(&input)?.build()?;
            print(&compute_report(&problem, which)?)?;
            Ok(true)
        }
        Command::Verify {
            suite,
            input,
            seed,
            cases,
        } => {
            let problem = input.map(|p| ProblemSpec::load(&p)?.build()).transpose()?;
            let report = run_suite(suite, problem.as_ref(), VerifyOptions { seed, cases })?;
            print(&report)?;
            Ok(report.passed)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("{}", e.to_json());
            ExitCode::from(e.exit_code())
        }
    }
}
