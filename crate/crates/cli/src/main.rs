//! `brownlab`: analyze finite groups at a prime, print weak-homomorphism
//! groups, export complexes and bundles, and run the verification suites.
//!
//! Exit codes: 0 success, 1 verification failure, 2 bad input, 3 size cap
//! exceeded, 4 internal invariant violated.

mod export;
mod report;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use brownlab::catalog::GroupSpec;
use brownlab::permgroup::{is_prime, GroupRef, DEFAULT_MAX_ORDER};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "brownlab",
    version,
    about = "Weak P-homomorphisms and Brown complexes of finite groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full report for a group at a prime.
    Analyze(AnalyzeArgs),
    /// The weak-homomorphism group with optional value tables.
    Weakhom(WeakhomArgs),
    /// Run property suites over the built-in catalog.
    Verify(VerifyArgs),
    /// Write a complex or bundle document.
    Export(ExportArgs),
}

#[derive(Args)]
struct Target {
    /// Group spec, e.g. sym:4, alt:5, product:dihedral:8xcyclic:3.
    group: String,
    /// The prime.
    #[arg(long = "p")]
    p: u64,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    target: Target,
    /// Embed the Brown complex in the report.
    #[arg(long)]
    complex: bool,
    /// Embed the orbit-space complex in the report.
    #[arg(long)]
    quotient: bool,
    /// Compare with the Quillen and Bouc complexes.
    #[arg(long)]
    variants: bool,
    /// Write complex.json, quotient.json and bundles.json into this directory.
    #[arg(long, value_name = "DIR")]
    export: Option<PathBuf>,
    #[arg(long)]
    no_timing: bool,
}

#[derive(Args)]
struct WeakhomArgs {
    #[command(flatten)]
    target: Target,
    /// Values modulo m; defaults to the exponent of the torsion.
    #[arg(long)]
    modulus: Option<u64>,
    /// Print value tables of the generators.
    #[arg(long)]
    list: bool,
    /// Cross-check counts with the independent oracle.
    #[arg(long)]
    oracle: bool,
    #[arg(long)]
    no_timing: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    WeakhomOracle,
    Cocycle,
    Topology,
    All,
}

#[derive(Args)]
struct VerifyArgs {
    suite: Suite,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportKind {
    Complex,
    Bundle,
}

#[derive(Args)]
struct ExportArgs {
    kind: ExportKind,
    #[command(flatten)]
    target: Target,
    /// For complexes: export the orbit space instead.
    #[arg(long)]
    quotient: bool,
    /// For bundles: values modulo m.
    #[arg(long)]
    modulus: Option<u64>,
    /// Write here instead of standard output.
    #[arg(long, value_name = "FILE")]
    output: Option<PathBuf>,
}

/// An error with its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<brownlab::Error> for Failure {
    fn from(err: brownlab::Error) -> Self {
        use brownlab::Error as E;
        let code = match err {
            E::MalformedCycles { .. }
            | E::PointOutOfRange { .. }
            | E::RepeatedPoint { .. }
            | E::NotABijection { .. }
            | E::DegreeMismatch { .. }
            | E::NotPrime(_)
            | E::UnsupportedGroup(_)
            | E::GroupSpec { .. } => 2,
            E::OrderCapExceeded { .. } | E::TooLarge(_) => 3,
            _ => 4,
        };
        Failure::new(code, err.to_string())
    }
}

pub struct Loaded {
    pub spec: GroupSpec,
    pub group: GroupRef,
    pub p: u64,
    pub started: Instant,
}

fn max_order() -> Result<usize, Failure> {
    match std::env::var("BROWNLAB_MAX_ORDER") {
        Ok(text) => text
            .trim()
            .parse()
            .map_err(|_| Failure::new(2, format!("BROWNLAB_MAX_ORDER=`{text}` is not a number"))),
        Err(_) => Ok(DEFAULT_MAX_ORDER),
    }
}

fn load(target: &Target) -> Result<Loaded, Failure> {
    let started = Instant::now();
    if !is_prime(target.p) {
        return Err(brownlab::Error::NotPrime(target.p).into());
    }
    let spec: GroupSpec = target.group.parse()?;
    let group = spec.build(max_order()?)?;
    Ok(Loaded {
        spec,
        group,
        p: target.p,
        started,
    })
}

pub fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("report serializes");
    text.push('\n');
    text
}

fn write_out(text: &str, path: Option<&PathBuf>) -> Result<(), Failure> {
    match path {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::new(2, format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Analyze(args) => {
            let input = load(&args.target)?;
            let options = report::AnalyzeOptions {
                complex: args.complex,
                quotient: args.quotient,
                variants: args.variants,
                export: args.export,
                timing: !args.no_timing,
            };
            print!("{}", to_json(&report::analyze(&input, &options)?));
            Ok(0)
        }
        Command::Weakhom(args) => {
            let input = load(&args.target)?;
            let options = report::WeakhomOptions {
                modulus: args.modulus,
                list: args.list,
                oracle: args.oracle,
                timing: !args.no_timing,
            };
            print!("{}", to_json(&report::weakhom(&input, &options)?));
            Ok(0)
        }
        Command::Verify(args) => {
            let suites: &[verify::SuiteName] = match args.suite {
                Suite::WeakhomOracle => &[verify::SuiteName::WeakhomOracle],
                Suite::Cocycle => &[verify::SuiteName::Cocycle],
                Suite::Topology => &[verify::SuiteName::Topology],
                Suite::All => &[
                    verify::SuiteName::WeakhomOracle,
                    verify::SuiteName::Cocycle,
                    verify::SuiteName::Topology,
                ],
            };
            let ok = verify::run(suites, &mut std::io::stdout().lock());
            Ok(if ok { 0 } else { 1 })
        }
        Command::Export(args) => {
            let input = load(&args.target)?;
            let text = match args.kind {
                ExportKind::Complex => to_json(&export::complex_document(&input, args.quotient)?),
                ExportKind::Bundle => to_json(&export::bundle_document(&input, args.modulus)?),
            };
            write_out(&text, args.output.as_ref())?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
