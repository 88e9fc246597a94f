//! `pwtree`: generate fixtures, check certificates, search for induced
//! subgraphs and minors, compute pathwidth, run the extraction procedures
//! and evaluate the bounds. Every run prints a JSON report.
//!
//! Exit codes: 0 found, holds or a value; 1 absent or fails; 2 budget
//! exhausted; 3 usage, input or parse error.

mod check;
mod constants;
mod extract;
mod generate;
mod report;
mod search;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand, ValueEnum};

use report::{Session, Status};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Parser, Debug)]
#[command(name = "pwtree", version, about = "Pathwidth, induced minors and induced-tree extraction")]
struct Cli {
    /// Search-node budget; unlimited when absent.
    #[arg(long, global = true)]
    budget: Option<u64>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Also write the report here.
    #[arg(long, global = true)]
    report: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a graph family or fixture.
    Generate {
        #[command(subcommand)]
        family: generate::Family,
        /// Output file; side files append an extension to this name.
        #[arg(short, long, global = true)]
        out: Option<PathBuf>,
    },
    /// Check a property or a certificate.
    Check {
        #[command(subcommand)]
        kind: check::CheckKind,
    },
    /// Induced-minor or induced-subgraph search.
    Find(search::FindArgs),
    /// Pathwidth.
    Pw(search::PwArgs),
    /// Run an extraction procedure.
    Extract {
        #[command(subcommand)]
        procedure: extract::Procedure,
    },
    /// Named bounds.
    Constants {
        #[command(subcommand)]
        cmd: constants::ConstantsCmd,
    },
}

fn dispatch(cmd: Command, s: &mut Session) -> Result<Status> {
    match cmd {
        Command::Generate { family, out } => generate::run(family, out, s),
        Command::Check { kind } => check::run(kind, s),
        Command::Find(a) => search::find(a, s),
        Command::Pw(a) => search::pw(a, s),
        Command::Extract { procedure } => extract::run(procedure, s),
        Command::Constants { cmd } => constants::run(cmd, s),
    }
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 3 } else { 0 });
        }
    };
    let mut session = Session::new(argv[1..].to_vec(), cli.budget, cli.seed);
    let status = match dispatch(cli.command, &mut session) {
        Ok(st) => st,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(3);
        }
    };
    let report = session.finish(status);
    let json = serde_json::to_string_pretty(&report).expect("report serializes") + "\n";
    if let Some(p) = &cli.report {
        if let Err(e) = std::fs::write(p, &json) {
            eprintln!("error: writing {}: {e}", p.display());
            return ExitCode::from(3);
        }
    }
    match cli.format {
        Format::Json => print!("{json}"),
        Format::Text => {
            let outcome = serde_json::to_value(report.outcome).expect("status serializes");
            println!("outcome: {}", outcome.as_str().unwrap_or_default());
            if let Some(v) = &report.value {
                println!("value: {v}");
            }
            if let Some(c) = &report.certificate {
                println!("certificate: {} {}", c.kind, c.path.as_deref().unwrap_or("(inline)"));
            }
        }
    }
    ExitCode::from(status.exit_code())
}
