use std::fs;
use std::path::PathBuf;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::ValueEnum;
use itree::certify::check_extraction;
use itree::extract::{
    default_target_size, extract_bipartite, extract_triangle_free, ExtractOptions, Extraction,
};
use itree::Graph;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::input::load_graphs;
use crate::report::{CommandEcho, RunReport, Verification};
use crate::{InputArgs, Outcome};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Bipartite,
    Trianglefree,
}

#[derive(Debug, clap::Args)]
pub struct Args {
    #[arg(long, value_enum)]
    mode: Mode,
    /// Target size; defaults to max(3, ceil(exp(c sqrt(ln n)))).
    #[arg(long)]
    t: Option<usize>,
    #[arg(long, default_value_t = 0.3)]
    c: f64,
    #[arg(long, default_value_t = 0)]
    root: usize,
    /// Write the full extraction traces here (JSON, one line per graph for
    /// batch input).
    #[arg(long)]
    trace_out: Option<PathBuf>,
    /// Worker threads for batch input; 0 picks the number of cores.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    #[command(flatten)]
    input: InputArgs,
}

struct Done {
    report: RunReport,
    extraction: Extraction,
}

fn target(args: &Args, g: &Graph) -> Result<(usize, &'static str)> {
    match args.t {
        Some(t) if t < 3 => bail!("--t must be at least 3"),
        Some(t) => Ok((t, "flag")),
        None => Ok((default_target_size(g.n(), args.c).max(3), "default")),
    }
}

fn extract_one(args: &Args, echo: &CommandEcho, info: &crate::input::InputInfo, g: &Graph) -> Result<Done> {
    let start = Instant::now();
    if !(args.c.is_finite() && args.c > 0.0) {
        bail!("--c must be a positive number");
    }
    let (t, t_source) = target(args, g)?;
    let opts = ExtractOptions { t, root: args.root };
    let extraction = match args.mode {
        Mode::Bipartite => extract_bipartite(g, opts),
        Mode::Trianglefree => extract_triangle_free(g, opts),
    }?;
    let mut verification = Verification::new();
    verification.check("certificate induces a tree", g.is_induced_tree(&extraction.tree.vertices));
    verification.absorb("certificate", check_extraction(g, t, &extraction));

    let trace = extraction.trace.as_ref();
    let b = trace.map_or(0, |tr| tr.b());
    let result = json!({
        "kind": "extraction",
        "mode": args.mode.to_possible_value().expect("named").get_name(),
        "n": g.n(),
        "edges": g.edge_count(),
        "t": t,
        "t_source": t_source,
        "c": args.c,
        "root": args.root,
        "tree": {
            "vertices": extraction.tree.vertices,
            "size": extraction.tree.vertices.len(),
            "provenance": extraction.tree.provenance,
        },
        "b": b,
        "guaranteed_size": 1u64.checked_shl(b as u32).unwrap_or(u64::MAX),
        "k": trace.map(|tr| tr.k),
        "ell": trace.map(|tr| tr.ell),
        "level_sizes": trace.map(|tr| tr.level_sizes.clone()),
        "steps": trace.map_or(Value::Array(Vec::new()), |tr| json!(tr.steps)),
    });
    let report = RunReport::new(echo, Some(info), result, verification, start.elapsed());
    Ok(Done { report, extraction })
}

pub fn run(args: &Args, echo: CommandEcho) -> Outcome {
    let (graphs, info) = load_graphs(args.input.input.as_deref(), args.input.input_format)?;
    let batch = graphs.len() > 1;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.jobs)
        .build()
        .map_err(|e| anyhow!("cannot start worker pool: {e}"))?;
    let results: Vec<Result<Done>> = pool.install(|| {
        graphs
            .par_iter()
            .map(|g| extract_one(args, &echo, &info, g))
            .collect()
    });

    let mut all_ok = true;
    let mut single_error = None;
    let mut failed = 0;
    let mut traces = Vec::new();
    for (i, result) in results.into_iter().enumerate() {
        match result {
            Ok(done) => {
                all_ok &= done.report.verification.ok;
                if batch {
                    done.report.at(i).print(false);
                    traces.push(serde_json::to_string(&json!({ "index": i, "extraction": done.extraction }))?);
                } else {
                    done.report.print(true);
                    traces.push(serde_json::to_string_pretty(&done.extraction)?);
                }
            }
            Err(e) if batch => {
                eprintln!("error: graph {i}: {e:#}");
                failed += 1;
            }
            Err(e) => single_error = Some(e),
        }
    }
    if let Some(e) = single_error {
        return Err(e);
    }
    if let Some(path) = &args.trace_out {
        let mut text = traces.join("\n");
        text.push('\n');
        fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))?;
    }
    if failed > 0 {
        bail!("{failed} of {} graphs could not be processed", graphs.len());
    }
    Ok(all_ok)
}
