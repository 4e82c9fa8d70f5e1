//! `laman`: rigidity checks, census, decomposition, reduction and the exact
//! K(3,3) elimination from the command line.
//!
//! Every command prints one JSON report `{command, inputs, result, timing_ms}`
//! with sorted keys. Exit status is 0 on success, 1 for unreadable or
//! malformed input and 2 when a mathematical precondition fails.

mod commands;
mod error;
mod input;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use laman_core::algebra::{k33_default_distances, DEFAULT_TOL};
use serde_json::json;

use crate::commands::Outcome;
use crate::error::CliError;

#[derive(Parser, Debug)]
#[command(
    name = "laman",
    version,
    about = "Combinatorial rigidity and exact elimination for plane distance constraints"
)]
struct Cli {
    /// Compact single-line JSON (the default).
    #[arg(long, global = true, conflicts_with = "pretty")]
    json: bool,

    /// Indented JSON.
    #[arg(long, global = true)]
    pretty: bool,

    /// Largest prime examined by the Frobenius sieve.
    #[arg(long, global = true, default_value_t = 10_000)]
    prime_bound: u64,

    /// Residual tolerance of the numeric solver.
    #[arg(long, global = true, default_value_t = DEFAULT_TOL)]
    tol: f64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Freedom number, independence, Laman and basic flags, 3-connectivity, planarity.
    Check { graph: PathBuf },
    /// Laman and basic Laman graphs on `n` vertices up to isomorphism (3 <= n <= 8).
    Census { n: usize },
    /// Unique block decomposition with virtual and redundant edges.
    Decompose { graph: PathBuf },
    /// Triangle-decomposition classification.
    Classify { graph: PathBuf },
    /// Reduce a 3-connected Laman graph to basic graphs and doublets.
    Reduce { graph: PathBuf },
    /// Exact elimination for K(3,3), factorization and non-solubility certificates.
    K33 {
        /// Eight comma-separated squared distances `d1..d8` (integers, `p/q` or decimals).
        #[arg(long)]
        distances: Option<String>,
    },
    /// Numeric embeddings by successive circle intersections.
    Solve {
        graph: PathBuf,
        /// Lines `a b value` giving squared edge lengths.
        #[arg(long)]
        distances: PathBuf,
        /// Base edge `a,b` pinned to `(0,0)-(1,0)`; defaults to the smallest edge.
        #[arg(long)]
        base: Option<String>,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Check { .. } => "check",
            Command::Census { .. } => "census",
            Command::Decompose { .. } => "decompose",
            Command::Classify { .. } => "classify",
            Command::Reduce { .. } => "reduce",
            Command::K33 { .. } => "k33",
            Command::Solve { .. } => "solve",
        }
    }
}

fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Check { graph } => commands::check(graph),
        Command::Census { n } => commands::census(*n),
        Command::Decompose { graph } => commands::decompose(graph),
        Command::Classify { graph } => commands::classify(graph),
        Command::Reduce { graph } => commands::reduce(graph),
        Command::K33 { distances } => {
            let d = match distances {
                Some(s) => input::parse_k33_distances(s)?,
                None => k33_default_distances(),
            };
            commands::k33(&d, cli.prime_bound)
        }
        Command::Solve { graph, distances, base } => {
            let base = base.as_deref().map(input::parse_edge).transpose()?;
            commands::solve(graph, distances, base, cli.tol)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let start = Instant::now();
    let outcome = match execute(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("laman {}: {e}", cli.command.name());
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let report = json!({
        "command": cli.command.name(),
        "inputs": outcome.inputs,
        "result": outcome.result,
        "timing_ms": start.elapsed().as_micros() as f64 / 1e3,
    });
    let text = if cli.pretty { serde_json::to_string_pretty(&report) } else { serde_json::to_string(&report) };
    // a closed pipe (`laman k33 | head`) is not an error worth reporting
    match writeln!(std::io::stdout().lock(), "{}", text.expect("reports serialize")) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
            eprintln!("laman: {e}");
            ExitCode::from(1)
        }
        _ => ExitCode::SUCCESS,
    }
}
