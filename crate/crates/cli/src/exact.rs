use std::time::Instant;

use anyhow::{anyhow, bail, Result};
use clap::ValueEnum;
use itree::exact::{
    independence_number, is_up_growing, max_induced_tree, max_induced_tree_naive,
    max_up_growing_top_count, ExactResult,
};
use itree::levels::{bfs_levels, LevelDecomposition};
use itree::Graph;
use rayon::prelude::*;
use serde_json::json;

use crate::input::{load_graphs, parse_vertex_list, InputInfo};
use crate::report::{CommandEcho, RunReport, Verification};
use crate::{InputArgs, Outcome};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Op {
    /// Largest induced tree.
    T,
    /// Independence number.
    Alpha,
    /// Most topmost-level vertices in an up-growing induced tree.
    UpGrowing,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Solver {
    /// Connected expansion with branch and bound.
    Search,
    /// All vertex subsets (n <= 20).
    Subsets,
}

#[derive(Debug, clap::Args)]
pub struct Args {
    #[arg(long, value_enum)]
    op: Op,
    /// Search node cap; the result says whether it was reached.
    #[arg(long, default_value_t = 50_000_000)]
    budget: u64,
    /// Solver for --op t.
    #[arg(long, value_enum, default_value_t = Solver::Search)]
    solver: Solver,
    /// BFS root for --op up-growing.
    #[arg(long, default_value_t = 0)]
    root: usize,
    /// Explicit levels for --op up-growing, e.g. "0|1,2|3,4"; overrides --root.
    #[arg(long)]
    levels: Option<String>,
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    #[command(flatten)]
    input: InputArgs,
}

fn parse_levels(n: usize, text: &str) -> Result<LevelDecomposition> {
    let levels = text
        .split('|')
        .map(parse_vertex_list)
        .collect::<Result<Vec<_>>>()?;
    Ok(LevelDecomposition::from_levels(n, levels)?)
}

fn solve(args: &Args, g: &Graph) -> Result<(ExactResult, Verification, serde_json::Value)> {
    let mut verification = Verification::new();
    let mut extra = json!({});
    let r = match args.op {
        Op::T => {
            let r = match args.solver {
                Solver::Search => max_induced_tree(g, args.budget),
                Solver::Subsets => max_induced_tree_naive(g)?,
            };
            verification.check(
                "witness induces a tree",
                g.is_induced_tree(&r.witness) || (g.n() == 0 && r.value == 0),
            );
            r
        }
        Op::Alpha => {
            let r = independence_number(g)?;
            verification.check("witness is independent", g.is_independent(&r.witness));
            r
        }
        Op::UpGrowing => {
            let levels = match &args.levels {
                Some(text) => parse_levels(g.n(), text)?,
                None => bfs_levels(g, args.root)?,
            };
            let r = max_up_growing_top_count(g, &levels, args.budget)?;
            let top = levels.levels().last().map_or(&[][..], Vec::as_slice);
            let on_top = r.witness.iter().filter(|v| top.contains(v)).count();
            verification.check("witness is up-growing", r.witness.is_empty() || is_up_growing(g, &levels, &r.witness));
            verification.check("witness induces a tree", r.witness.is_empty() || g.is_induced_tree(&r.witness));
            verification.check("witness meets the top level value times", on_top == r.value);
            extra = json!({ "root": levels.root(), "level_sizes": levels.sizes() });
            r
        }
    };
    if args.op != Op::UpGrowing {
        verification.check("witness size equals value", r.witness.len() == r.value);
    }
    Ok((r, verification, extra))
}

fn one(args: &Args, echo: &CommandEcho, info: &InputInfo, g: &Graph) -> Result<RunReport> {
    let start = Instant::now();
    if args.solver == Solver::Subsets && args.op != Op::T {
        bail!("--solver only applies to --op t");
    }
    let (r, verification, extra) = solve(args, g)?;
    let result = json!({
        "kind": "exact",
        "op": args.op.to_possible_value().expect("named").get_name(),
        "solver": args.solver.to_possible_value().expect("named").get_name(),
        "n": g.n(),
        "edges": g.edge_count(),
        "value": r.value,
        "witness": r.witness,
        "nodes_explored": r.nodes_explored,
        "exhausted": r.exhausted,
        "details": extra,
    });
    Ok(RunReport::new(echo, Some(info), result, verification, start.elapsed()))
}

pub fn run(args: &Args, echo: CommandEcho) -> Outcome {
    let (graphs, info) = load_graphs(args.input.input.as_deref(), args.input.input_format)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.jobs)
        .build()
        .map_err(|e| anyhow!("cannot start worker pool: {e}"))?;
    let reports: Vec<Result<RunReport>> =
        pool.install(|| graphs.par_iter().map(|g| one(args, &echo, &info, g)).collect());
    if graphs.len() == 1 {
        let report = reports.into_iter().next().expect("one graph")?;
        report.print(true);
        return Ok(report.verification.ok);
    }
    let mut all_ok = true;
    let mut failed = 0;
    for (i, report) in reports.into_iter().enumerate() {
        match report {
            Ok(report) => {
                all_ok &= report.verification.ok;
                report.at(i).print(false);
            }
            Err(e) => {
                eprintln!("error: graph {i}: {e:#}");
                failed += 1;
            }
        }
    }
    if failed > 0 {
        bail!("{failed} of {} graphs could not be processed", graphs.len());
    }
    Ok(all_ok)
}
