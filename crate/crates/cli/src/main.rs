//! `frontal`: batch checks and searches over finite Hilbert algebras.
//!
//! Exit codes: 0 when every check passes, 1 when a checked property fails,
//! 2 on usage, parse or validation errors.

mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use frontal::{AxiomClass, Guards, OperatorKind};
use serde_json::json;

#[derive(Parser, Debug)]
#[command(name = "frontal", version, about = "Finite Hilbert algebras, free extensions and frontal operators")]
struct Cli {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    /// JSON mirroring the report tree, with a `format_version` field.
    Structured,
}

fn parse_class(s: &str) -> Result<AxiomClass, String> {
    s.parse().map_err(|e: frontal::Error| e.to_string())
}

fn parse_op(s: &str) -> Result<OperatorKind, String> {
    s.parse().map_err(|e: frontal::Error| e.to_string())
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check an algebra against an axiom class (default: the class its fields declare).
    Check {
        file: PathBuf,
        /// hilbert, bounded_hilbert, is, bounded_is or heyting_upsets
        #[arg(long, value_parser = parse_class)]
        class: Option<AxiomClass>,
    },
    /// List the irreducible filters and their inclusion covers.
    Spectrum { file: PathBuf },
    /// Build the free implicative semilattice extension L(H).
    Extend {
        file: PathBuf,
        /// Accept a non-frontal tau with a warning.
        #[arg(long)]
        allow_non_frontal: bool,
    },
    /// Lift a homomorphism H1 -> H2 to L(H1) -> L(H2).
    Lift {
        source: PathBuf,
        target: PathBuf,
        /// Map document {"map": [...]}.
        #[arg(long)]
        hom: PathBuf,
    },
    /// Factor a homomorphism H -> A through L(H), for A an implicative semilattice.
    Factor {
        file: PathBuf,
        #[arg(long)]
        into: PathBuf,
        #[arg(long)]
        hom: PathBuf,
    },
    /// Frontal operators.
    Frontal {
        #[command(subcommand)]
        command: FrontalCommand,
    },
    /// Operations on the upsets of a poset.
    Poset {
        #[command(subcommand)]
        command: PosetCommand,
    },
    /// Enumerate algebras up to isomorphism.
    Search {
        #[arg(long)]
        size: usize,
        #[arg(long, value_parser = parse_class, default_value = "hilbert")]
        class: AxiomClass,
        /// Keep only algebras lacking this operator: succ, gamma or gabbay.
        #[arg(long, value_parser = parse_op)]
        without: Option<OperatorKind>,
    },
    /// Run the full invariant suite on one algebra.
    Verify { file: PathBuf },
}

#[derive(Subcommand, Debug)]
pub enum FrontalCommand {
    /// Compute the canonical operator, if it exists.
    Find {
        file: PathBuf,
        #[arg(long, value_parser = parse_op)]
        op: OperatorKind,
    },
    /// Classify the document's tau.
    Classify { file: PathBuf },
}

#[derive(Subcommand, Debug)]
pub enum PosetCommand {
    /// Co-derivative and successor on upsets: one upset, or all of them.
    Ops {
        file: PathBuf,
        /// Comma-separated members of a single upset.
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        upset: Option<Vec<usize>>,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Check { .. } => "check",
            Command::Spectrum { .. } => "spectrum",
            Command::Extend { .. } => "extend",
            Command::Lift { .. } => "lift",
            Command::Factor { .. } => "factor",
            Command::Frontal { command: FrontalCommand::Find { .. } } => "frontal find",
            Command::Frontal { command: FrontalCommand::Classify { .. } } => "frontal classify",
            Command::Poset { .. } => "poset ops",
            Command::Search { .. } => "search",
            Command::Verify { .. } => "verify",
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let guards = Guards::from_env();
    let name = cli.command.name();
    match commands::run(&cli.command, &guards) {
        Ok(out) => {
            match cli.format {
                Format::Text => print!("{}", out.text),
                Format::Structured => {
                    let doc = json!({
                        "format_version": 1,
                        "command": name,
                        "ok": out.ok,
                        "result": out.data,
                    });
                    println!("{}", serde_json::to_string_pretty(&doc).unwrap());
                }
            }
            ExitCode::from(if out.ok { 0 } else { 1 })
        }
        Err(failure) => {
            match cli.format {
                Format::Text => eprintln!("error: {}", failure.message),
                Format::Structured => {
                    let doc = json!({
                        "format_version": 1,
                        "command": name,
                        "ok": false,
                        "error": failure.message,
                    });
                    println!("{}", serde_json::to_string_pretty(&doc).unwrap());
                }
            }
            ExitCode::from(failure.code)
        }
    }
}
