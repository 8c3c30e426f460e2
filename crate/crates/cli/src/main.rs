//! `chevlab`: batch runner for the verification crates.

mod commands;
mod output;

use std::process::ExitCode;

use chevgroup::Realization;
use clap::{Parser, Subcommand, ValueEnum};
use rootsys::SystemType;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    JsonLines,
}

#[derive(Debug, Parser)]
#[command(
    name = "chevlab",
    version,
    about = "Exact verification of Chevalley group identities"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Root system: A1, A2, B2 or G2.
    #[arg(long, global = true)]
    pub system: Option<SystemType>,
    /// Prime modulus for finite-field computations.
    #[arg(long, global = true)]
    pub prime: Option<u64>,
    /// Matrix model: adjoint, pgl3 or a1std.
    #[arg(long, global = true)]
    pub realization: Option<Realization>,
    /// Glob on record names (prooflab only).
    #[arg(long, global = true)]
    pub filter: Option<String>,
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub output: OutputFormat,
    /// Allow group orders above the default threshold.
    #[arg(long, global = true)]
    pub slow: bool,
    /// Bound on group order (sha) or search size (centralizer, decompose).
    #[arg(long, global = true)]
    pub cap: Option<u64>,
    /// Omit timing fields from reports.
    #[arg(long, global = true)]
    pub no_timing: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the commutator relations computed from the Chevalley basis.
    Relations {
        /// System, as an alternative to --system.
        #[arg(value_name = "SYSTEM")]
        named: Option<SystemType>,
    },
    /// Check the centralizer families, and with --prime compare them with exhaustive scans.
    Centralizer,
    /// Run the identity catalog, the G2 entry chain and the short-root checks.
    Prooflab,
    /// Certify that class-preserving endomorphisms are inner (needs --system and --prime).
    Sha,
    /// Bruhat decomposition of a word over F_p (needs --system and --prime).
    Decompose { word: String },
    /// Evaluate a word as a matrix.
    Eval { word: String },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match commands::dispatch(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
