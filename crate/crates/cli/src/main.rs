//! `skewcodec` — field arithmetic, skew-polynomial operations, mixed
//! field/ring code construction, dual-containing search, and reference
//! reproduction, from the command line.
//!
//! Every subcommand prints a JSON report on stdout (`--human` switches to
//! a plain-text rendering). Errors print on stderr and set the exit code
//! by class: 2 for specification/input problems, 3 for mathematical
//! validation failures, 4 for exhausted work budgets. `reproduce` exits 1
//! when any entry fails.

use clap::{Parser, Subcommand};
use serde::Serialize;
use skewcodec_cli::report::ReproduceReport;
use skewcodec_cli::{cmd_code, cmd_field, cmd_reproduce, cmd_search, cmd_skew};
use skewcodec_core::Strategy;

#[derive(Parser, Debug)]
#[command(name = "skewcodec", version, about = "mixed field/ring code toolkit")]
struct Cli {
    /// Work budget for enumerations and distance computations
    /// (default: SKEWCODEC_BUDGET env var, else 2^26).
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Distance strategy: auto, enumerate, or support.
    #[arg(long, global = true, default_value = "auto")]
    strategy: String,
    /// Worker threads for parallel sections (default: all cores).
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Plain-text output instead of JSON.
    #[arg(long, global = true)]
    human: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Describe a finite field presentation.
    Field(cmd_field::FieldArgs),
    /// Skew-polynomial arithmetic on explicit operands.
    Skew(cmd_skew::SkewArgs),
    /// Build a code from a spec file and report its invariants.
    Code(cmd_code::CodeArgs),
    /// Enumerate dual-containing generator tuples under a budget.
    Search(cmd_search::SearchArgs),
    /// Re-derive bundled reference results (PASS/FAIL per entry).
    Reproduce(cmd_reproduce::ReproduceArgs),
}

fn parse_strategy(s: &str) -> Result<Strategy, skewcodec_core::Error> {
    match s {
        "auto" => Ok(Strategy::Auto),
        "enumerate" => Ok(Strategy::Enumerate),
        "support" => Ok(Strategy::SupportSearch),
        other => Err(skewcodec_core::Error::unsupported(format!(
            "unknown strategy {other:?} (expected auto, enumerate, or support)"
        ))),
    }
}

fn budget_of(cli: &Cli) -> u64 {
    cli.budget
        .or_else(|| std::env::var("SKEWCODEC_BUDGET").ok()?.parse().ok())
        .unwrap_or(1 << 26)
}

fn emit<T: Serialize>(value: &T, human: bool, render: impl Fn(&T) -> String) {
    if human {
        println!("{}", render(value));
    } else {
        println!("{}", serde_json::to_string_pretty(value).unwrap());
    }
}

fn main() {
    let cli = Cli::parse();
    if let Some(workers) = cli.workers {
        // ignore failure: the global pool can only be set once
        let _ = rayon::ThreadPoolBuilder::new().num_threads(workers).build_global();
    }
    let budget = budget_of(&cli);
    let strategy = match parse_strategy(&cli.strategy) {
        Ok(s) => s,
        Err(e) => fail(e),
    };

    match &cli.command {
        Command::Field(args) => match cmd_field::run(args) {
            Ok(rep) => emit(&rep, cli.human, cmd_field::human),
            Err(e) => fail(e),
        },
        Command::Skew(args) => match cmd_skew::run(args) {
            Ok(rep) => emit(&rep, cli.human, cmd_skew::human),
            Err(e) => fail(e),
        },
        Command::Code(args) => match cmd_code::run(args, strategy, budget) {
            Ok(rep) => emit(&rep, cli.human, cmd_code::human),
            Err(e) => fail(e),
        },
        Command::Search(args) => match cmd_search::run(args, strategy, budget) {
            Ok(rep) => emit(&rep, cli.human, cmd_search::human),
            Err(e) => fail(e),
        },
        Command::Reproduce(args) => match cmd_reproduce::run(args, budget) {
            Ok(reports) => {
                if cli.human {
                    println!("{}", cmd_reproduce::human(&reports));
                } else {
                    let v: Vec<&ReproduceReport> = reports.iter().collect();
                    println!("{}", serde_json::to_string_pretty(&v).unwrap());
                }
                if !cmd_reproduce::all_passed(&reports) {
                    std::process::exit(1);
                }
            }
            Err(e) => fail(e),
        },
    }
}

fn fail(e: skewcodec_core::Error) -> ! {
    eprintln!("error: {e}");
    std::process::exit(e.exit_class() as i32)
}
