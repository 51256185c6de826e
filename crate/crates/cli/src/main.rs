//! `itree`: generate graphs, extract certified induced trees, run the exact
//! oracles and check the selection lemmas, with JSON reports on stdout.
//!
//! Exit codes: 0 success, 1 a certificate or check was rejected, 2 usage or
//! input error.

mod exact;
mod extract;
mod fsearch;
mod generate;
mod input;
mod report;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use crate::input::InputFormat;
use crate::report::CommandEcho;

const DEFAULT_SEED: u64 = 0;

#[derive(Debug, Parser)]
#[command(name = "itree", version, about = "Induced trees in triangle-free and bipartite graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Where graphs come from for commands that read them.
#[derive(Debug, Clone, clap::Args)]
pub struct InputArgs {
    /// Input file; standard input when absent or `-`.
    #[arg(long, short)]
    pub input: Option<PathBuf>,
    /// Input format; detected from the first byte when absent.
    #[arg(long, value_enum)]
    pub input_format: Option<InputFormat>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a graph from one of the built-in families.
    Generate(generate::Args),
    /// Extract a certified induced tree from each input graph.
    Extract(extract::Args),
    /// Exact oracles: t(G), independence number, up-growing trees.
    Exact(exact::Args),
    /// Minimum t over connected graphs of a class on n vertices.
    Fsearch(fsearch::Args),
    /// Run one of the selection lemmas and check its outcome.
    Verify(verify::Args),
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Generate(_) => "generate",
            Command::Extract(_) => "extract",
            Command::Exact(_) => "exact",
            Command::Fsearch(_) => "fsearch",
            Command::Verify(_) => "verify",
        }
    }
}

/// What a command reports back: whether every check passed.
pub type Outcome = anyhow::Result<bool>;

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter_or("ITREE_LOG", "warn"))
        .format_timestamp(None)
        .init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let echo = CommandEcho {
        subcommand: cli.command.name(),
        argv: std::env::args().skip(1).collect(),
        seed: None,
    };
    let outcome = match &cli.command {
        Command::Generate(args) => generate::run(args, echo),
        Command::Extract(args) => extract::run(args, echo),
        Command::Exact(args) => exact::run(args, echo),
        Command::Fsearch(args) => fsearch::run(args, echo),
        Command::Verify(args) => verify::run(args, echo),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
