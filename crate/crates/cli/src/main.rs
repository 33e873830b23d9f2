//! Command-line interface for the exact homology engine.
//!
//! Exit codes: `0` success / all suites pass, `1` a verification failed,
//! `2` usage or parse error, `3` resource or cache trouble.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use herbert_cli::report::{render_compute_text, render_run_text, to_canonical_json, RunReport};
use herbert_cli::suites;
use herbert_core::engine::Engine;
use herbert_core::error::Error;

#[derive(Parser)]
#[command(
    name = "herbert",
    version,
    about = "Exact homology of finite groups and their twisted Z-extensions"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Directory for the resolution cache (the HERBERT_CACHE environment
    /// variable overrides this flag).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Pivot seed used by the exact linear algebra.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a homology or cohomology group of a group spec.
    Compute {
        /// Group spec: a preset name (Z4, Q8, Z4xZ2, Z4xZ4, Z4xZ4_sd_Z2,
        /// Z4_sd_Z, Z4xZ2_sd_Z, Z4xZ4_sd_Z, Z4xZ4_sd_Z2_sd_Z, ...) or
        /// inline JSON.
        #[arg(long)]
        group: String,
        /// Coefficient module name: Z, Ztw, or Ztw^k.
        #[arg(long)]
        module: String,
        /// Degree q.
        #[arg(long)]
        degree: usize,
        /// Compute cohomology instead of homology.
        #[arg(long)]
        cohomology: bool,
    },
    /// Run a verification suite by id, or all of them.
    Verify {
        /// A suite id (lemma1a, lemma1b, lemma1c, lemma1d, tauQ, tauDiag,
        /// corQ, corDiagA, corDiagB, reps, qEmbed, groupIdentity, theorem3)
        /// or "all".
        #[arg(long)]
        suite: String,
    },
    /// Re-run the final parity replay together with the suites it depends
    /// on.
    ReplayTheorem3,
}

fn error_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) => 2,
        Error::ResourceLimit(_) | Error::Cache(_) => 3,
        _ => 1,
    }
}

fn emit_run(report: &RunReport, format: Format) -> ExitCode {
    match format {
        Format::Text => print!("{}", render_run_text(report)),
        Format::Json => println!("{}", to_canonical_json(report)),
    }
    if report.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cache_dir = std::env::var_os("HERBERT_CACHE").map(PathBuf::from).or(cli.cache_dir);
    let engine = Engine::new(cache_dir, cli.seed);
    match cli.command {
        Command::Compute { group, module, degree, cohomology } => {
            match engine.compute(&group, &module, degree, cohomology) {
                Ok(report) => {
                    match cli.format {
                        Format::Text => print!("{}", render_compute_text(&report)),
                        Format::Json => println!("{}", to_canonical_json(&report)),
                    }
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(error_code(&e))
                }
            }
        }
        Command::Verify { suite } => {
            if suite != "all" && !suites::is_suite(&suite) {
                eprintln!(
                    "error: unknown suite {suite:?}; expected one of {} or \"all\"",
                    suites::SUITES.join(", ")
                );
                return ExitCode::from(2);
            }
            match suites::run_verify(&engine, &suite) {
                Ok(report) => emit_run(&report, cli.format),
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(error_code(&e))
                }
            }
        }
        Command::ReplayTheorem3 => match suites::run_replay(&engine) {
            Ok(report) => emit_run(&report, cli.format),
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(error_code(&e))
            }
        },
    }
}
