mod analyze;
mod bench;
mod certify;
mod error;
mod gen;
mod input;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use crate::error::CliError;

/// Scattering number, spanning staves and Hamiltonicity certificates for
/// interval graphs.
#[derive(Debug, Parser)]
#[command(name = "ivham", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Recognize the graph and report its scattering number and classification.
    Analyze(analyze::AnalyzeArgs),
    /// Construct a certificate of the requested kind.
    Certify(certify::CertifyArgs),
    /// Check a certificate against a graph.
    Verify(certify::VerifyArgs),
    /// Generate interval graphs.
    Gen(gen::GenArgs),
    /// Time the pipeline on random interval graphs of growing size.
    Bench(bench::BenchArgs),
}

fn dispatch(command: &Command) -> Result<String, CliError> {
    match command {
        Command::Analyze(args) => analyze::run(args),
        Command::Certify(args) => certify::certify(args),
        Command::Verify(args) => certify::verify(args),
        Command::Gen(args) => gen::run(args),
        Command::Bench(args) => bench::run(args),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli.command) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.as_bytes()).is_err() {
                return ExitCode::from(4);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            match &e {
                CliError::Rejected(violations) => {
                    for v in violations {
                        eprintln!("violation: {v}");
                    }
                }
                other => eprintln!("error: {other}"),
            }
            ExitCode::from(e.exit_code())
        }
    }
}
