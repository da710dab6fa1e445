use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use nichols_weyl::cli::{run_text, Command, Options, Status};

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Cmd {
    /// Check the cocycle and module axioms.
    Validate,
    /// Print the Cartan matrix of the tuple.
    Cartan,
    /// Explore the reflection orbit and check the Cartan graph axioms.
    Graph,
    /// Enumerate real roots and check the root-system axioms.
    Roots,
    /// Classify the Tits cone and run the alcove grid check.
    Titscone,
    /// Graded dimensions of the Nichols algebra of one module.
    Hilbert,
}

impl From<Cmd> for Command {
    fn from(c: Cmd) -> Self {
        match c {
            Cmd::Validate => Command::Validate,
            Cmd::Cartan => Command::Cartan,
            Cmd::Graph => Command::Graph,
            Cmd::Roots => Command::Roots,
            Cmd::Titscone => Command::Titscone,
            Cmd::Hilbert => Command::Hilbert,
        }
    }
}

/// Nichols algebras, Cartan graphs and Tits cones over twisted
/// Yetter-Drinfeld modules.
///
/// Exit codes: 0 success, 2 validation failure, 3 cap exceeded, 4 parse error.
#[derive(Debug, Parser)]
#[command(name = "nichols-weyl", version)]
struct Args {
    #[arg(value_enum)]
    command: Cmd,
    /// TOML config file.
    #[arg(long)]
    config: PathBuf,
    /// Word bound L for roots, connectivity and chambers.
    #[arg(long)]
    word_bound: Option<usize>,
    /// Top degree for `hilbert`.
    #[arg(long)]
    max_deg: Option<usize>,
    /// Module for `hilbert` (default: first tuple entry).
    #[arg(long)]
    module: Option<String>,
    /// Write the Cartan graph in DOT format.
    #[arg(long)]
    dot: Option<PathBuf>,
    /// Write the JSON report.
    #[arg(long)]
    report: Option<PathBuf>,
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { Status::ParseError.exit_code() as u8 } else { 0 });
        }
    };
    let text = match std::fs::read_to_string(&args.config) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("cannot read {}: {e}", args.config.display());
            return ExitCode::from(Status::ParseError.exit_code() as u8);
        }
    };
    let opts = Options { word_bound: args.word_bound, max_deg: args.max_deg, module: args.module };
    let outcome = run_text(args.command.into(), &text, &opts);
    if outcome.status == Status::Ok {
        print!("{}", outcome.text);
    } else {
        eprint!("{}", outcome.text);
    }
    let mut status = outcome.status;
    if let (Some(path), Some(dot)) = (&args.dot, &outcome.dot) {
        if let Err(e) = std::fs::write(path, dot) {
            eprintln!("cannot write {}: {e}", path.display());
            status = Status::ValidationFailure;
        }
    }
    if let Some(path) = &args.report {
        if let Err(e) = std::fs::write(path, outcome.report_json()) {
            eprintln!("cannot write {}: {e}", path.display());
            status = Status::ValidationFailure;
        }
    }
    ExitCode::from(status.exit_code() as u8)
}
