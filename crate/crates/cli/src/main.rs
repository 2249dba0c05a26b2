//! `descents`: exact tables, verification suites, and counterexample scans
//! for descent statistics on involutions, reverse Yamanouchi words, and
//! row-strict semistandard Young tableaux.
//!
//! Exit codes: 0 = success / everything verified; 1 = a verification failed
//! or an expected counterexample was not found; 2 = usage error.

mod cache;
mod counterexample;
mod output;
mod tables;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "descents",
    version,
    about = "Exact descent-distribution tables and log-concavity scans",
    long_about = "Computes exact (arbitrary-precision) tables of descent counts on \
involutions and reverse Yamanouchi words and of semistandard-tableau counts, \
verifies the identities connecting them, and scans rows for log-concavity \
counterexamples. All output values are decimal strings; nothing is ever \
rounded through floating point or 64-bit integers."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute table rows and export them as CSV or JSON.
    Tables(TablesArgs),
    /// Run a verification suite and report each identity checked.
    Verify(VerifyArgs),
    /// Scan rows for log-concavity failures with exact witnesses.
    Counterexample(CounterexampleArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Involutions,
    Yamanouchi,
    Ssyt,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Closed formula (inverse transform for descent rows).
    Formula,
    /// Coefficients of the column generating series (ssyt only).
    Series,
    /// Binomial transform of the descent row (ssyt only).
    Transform,
    /// Exhaustive enumeration, within the oracle bounds.
    Brute,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Args)]
pub struct TablesArgs {
    /// Which family of counts to tabulate.
    #[arg(value_enum)]
    pub kind: Kind,

    /// Single row index n.
    #[arg(long)]
    pub n: Option<usize>,

    /// First row of an inclusive range (requires --n-to).
    #[arg(long)]
    pub n_from: Option<usize>,

    /// Last row of an inclusive range (requires --n-from).
    #[arg(long)]
    pub n_to: Option<usize>,

    /// Largest column index k to include (inclusive). Defaults to the full
    /// row for descent families and to k = n for ssyt rows.
    #[arg(long)]
    pub k_max: Option<usize>,

    #[arg(long, value_enum, default_value = "formula")]
    pub method: Method,

    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,

    /// Write to a file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,

    /// Skip the table cache entirely (neither read nor written).
    #[arg(long)]
    pub no_cache: bool,

    /// Raise the brute-force enumeration bound for this invocation.
    #[arg(long)]
    pub oracle_bound: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// Round trips and descent complementation of the bijections.
    Bijections,
    /// Row symmetry and unimodality of the descent tables.
    Symmetry,
    /// Binomial transform route agrees with the closed formula and brute force.
    Eq2,
    /// Inverse-transform descent counts agree with enumeration; row sums.
    Eq3,
    /// Fully expanded descent-count formula; --printed-form demonstrates
    /// the sign-typo variant failing.
    Eq4,
    /// Row generating functions match the descent polynomial transform.
    Gf,
    /// Schur polynomial equals the sum of fundamental quasisymmetric functions.
    Schur,
    /// Everything above (with per-suite default bounds).
    All,
}

#[derive(Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: Suite,

    /// Largest n checked (per-suite default when omitted).
    #[arg(long)]
    pub n_max: Option<usize>,

    /// Largest symbol bound checked where applicable.
    #[arg(long)]
    pub s_max: Option<usize>,

    /// Largest variable count for the Schur identity.
    #[arg(long)]
    pub m_max: Option<usize>,

    /// Largest shape size for the Schur identity.
    #[arg(long)]
    pub size_max: Option<usize>,

    /// For eq4: check the in-print variant of the explicit formula (the one
    /// with +2i in the inner binomial) against enumeration. It fails, with a
    /// witness, and the command exits 1.
    #[arg(long)]
    pub printed_form: bool,

    /// Raise the brute-force enumeration bounds for this invocation.
    #[arg(long)]
    pub oracle_bound: Option<usize>,

    /// Write the JSON report to a file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Involutions,
    SsytRows,
}

#[derive(Args)]
pub struct CounterexampleArgs {
    #[arg(value_enum)]
    pub target: Target,

    #[arg(long)]
    pub n_from: usize,

    #[arg(long)]
    pub n_to: usize,

    /// Largest column of each ssyt row scanned (default: k = n per row).
    #[arg(long)]
    pub k_max: Option<usize>,

    /// Write the report to a file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// A post-parse usage error: printed to stderr, exit code 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Tables(args) => tables::run(&args),
        Command::Verify(args) => verify::run(&args),
        Command::Counterexample(args) => counterexample::run(&args),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
