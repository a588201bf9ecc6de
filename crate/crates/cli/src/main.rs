use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use duplicial_cli::scenario::parse_scenario;
use duplicial_cli::suites::Suite;
use duplicial_cli::{run, RunOptions};

#[derive(Parser)]
#[command(name = "duplicial", version, about = "Check comonad, coalgebra and duplicial laws on finite G-sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run suites against a scenario file and print a JSON report.
    Check {
        scenario: PathBuf,
        /// Suite to run (repeatable); `all` runs every suite.
        #[arg(long = "suite", value_name = "NAME")]
        suites: Vec<String>,
        /// Highest simplicial level checked.
        #[arg(long)]
        cap: Option<usize>,
        /// Write the report here instead of stdout.
        #[arg(long, value_name = "PATH")]
        report: Option<PathBuf>,
        /// Record per-suite wall time in the report.
        #[arg(long)]
        timing: bool,
    },
}

fn input_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let Command::Check {
        scenario,
        suites,
        cap,
        report,
        timing,
    } = Cli::parse().command;

    let text = match std::fs::read_to_string(&scenario) {
        Ok(t) => t,
        Err(e) => return input_error(format!("{}: {e}", scenario.display())),
    };
    let sc = match parse_scenario(&text) {
        Ok(s) => s,
        Err(e) => return input_error(format!("{}: {e}", scenario.display())),
    };
    let mut selected = Vec::new();
    for name in &suites {
        match Suite::parse(name) {
            Ok(v) => selected.extend(v),
            Err(e) => return input_error(e),
        }
    }
    let opts = RunOptions {
        suites: selected,
        level_cap: cap,
        timing,
        probe_bound: None,
    };
    let rep = match run(&sc, &opts) {
        Ok(r) => r,
        Err(e) => return input_error(e),
    };
    let json = rep.to_json();
    match report {
        Some(path) => {
            if let Err(e) = std::fs::write(&path, &json) {
                return input_error(format!("{}: {e}", path.display()));
            }
        }
        None => print!("{json}"),
    }
    ExitCode::from(rep.exit_code() as u8)
}
