//! `racb`: experiments on right-angled Coxeter groups and their buildings.
//!
//! Reports are JSON on stdout (and in `--report` when given); a one-line
//! summary goes to stderr. Exit codes: 0 ok, 1 falsified, 2 usage, 3 cap.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "racb", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    /// Firmness of a word, with its poset and a firm rearrangement.
    Firmness,
    /// All reduced representations of a word.
    Reps,
    /// The precedence poset of a word.
    Poset,
    /// Largest length carrying an element of firmness at most n.
    Dn,
    /// Longest increasing sequence with free chains bounded by b.
    Fb,
    /// Least k such that every increasing sequence of length k raises firmness.
    Kw,
    /// Chambers of a ball, as JSON, DOT, CSV or text.
    Ball,
    /// Chambers of firmness at most n inside a ball.
    Flex,
    /// Compare the square closure of ball(c0, n) with the n-flex.
    VerifyFlex,
    /// Compare the fixed points of the ball fixator with the n-flex.
    Fixedpoint,
    /// Check that wing permutations at a far panel fix ball(c0, r).
    FarWing,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Dot,
    Csv,
    Text,
}

#[derive(Args, Debug, Clone, Default)]
pub struct Opts {
    /// Diagram JSON file.
    #[arg(long, global = true)]
    pub diagram: Option<PathBuf>,
    /// Word of generator names separated by spaces.
    #[arg(long, global = true)]
    pub word: Option<String>,
    /// Base chamber, e.g. "s:1 t:2" (default: the identity chamber).
    #[arg(long, global = true)]
    pub center: Option<String>,
    /// Chamber on the near side of the panel (far-wing).
    #[arg(long, global = true)]
    pub gate: Option<String>,
    /// Panel type (far-wing).
    #[arg(long, global = true)]
    pub gen: Option<String>,
    #[arg(long, global = true)]
    pub n: Option<usize>,
    #[arg(long, global = true)]
    pub radius: Option<usize>,
    #[arg(long, global = true)]
    pub b: Option<usize>,
    /// Bound on visited states or enumerated chambers.
    #[arg(long, global = true)]
    pub cap: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Also write the JSON report to this file.
    #[arg(long, global = true)]
    pub report: Option<PathBuf>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(threads) = cli.opts.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match commands::run(cli.command, &cli.opts) {
        Ok(outcome) => ExitCode::from(outcome.code()),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
