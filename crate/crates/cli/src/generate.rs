use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::ValueEnum;
use itree::generators::{
    blow_up, classic, path_of_bicliques, random_connected_bipartite,
    random_connected_triangle_free, tree_node_count, truncated_path_of_bicliques, BlowUpSpec,
};
use itree::io::{write_edge_list, write_graph6};
use itree::Graph;
use serde_json::{json, Value};

use crate::input::{self, parse_vertex_list};
use crate::report::{emit, CommandEcho, RunReport, Verification};
use crate::{InputArgs, Outcome, DEFAULT_SEED};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// Bicliques between consecutive levels of sizes 1, 2, .., k, .., 2, 1 (--k).
    PathOfBicliques,
    /// The first --n vertices of the smallest path of bicliques with k^2 >= n.
    TruncatedBicliques,
    /// Copies of the input graph along a complete tree (--r or --ports, --l).
    BlowUp,
    /// Connected triangle-free: random tree plus --edges sampled extra edges.
    RandomTf,
    /// Connected bipartite: random tree plus --edges sampled cross edges.
    RandomBip,
    Path,
    Cycle,
    Complete,
    /// K_{n,m}.
    CompleteBipartite,
    /// K_{1,n}.
    Star,
}

impl Family {
    fn is_random(self) -> bool {
        matches!(self, Family::RandomTf | Family::RandomBip)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Graph6,
    EdgeList,
    Json,
}

#[derive(Debug, clap::Args)]
pub struct Args {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    /// Second side for complete-bipartite.
    #[arg(long)]
    m: Option<usize>,
    /// Blow-up arity; uses ports 0..=r of the base graph.
    #[arg(long, conflicts_with = "ports")]
    r: Option<usize>,
    /// Blow-up ports w_0,w_1,.. as a comma-separated list.
    #[arg(long)]
    ports: Option<String>,
    /// Blow-up depth.
    #[arg(long)]
    l: Option<usize>,
    /// Extra edges sampled by the random families; defaults to n.
    #[arg(long)]
    edges: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// Number of graphs; graph i uses seed + i.
    #[arg(long, default_value_t = 1)]
    count: u64,
    #[arg(long, default_value_t = 1_000_000)]
    max_vertices: usize,
    #[arg(long, value_enum, default_value_t = OutputFormat::Graph6)]
    format: OutputFormat,
    #[command(flatten)]
    input: InputArgs,
}

fn need(value: Option<usize>, flag: &str, family: Family) -> Result<usize> {
    value.with_context(|| format!("--{flag} is required for {family:?}"))
}

struct Generated {
    graph: Graph,
    extra: Value,
    checks: Vec<(&'static str, bool)>,
}

fn build(args: &Args, seed: u64, base: Option<&Graph>) -> Result<Generated> {
    let f = args.family;
    let mut extra = json!({});
    let mut checks = Vec::new();
    let graph = match f {
        Family::PathOfBicliques => {
            let k = need(args.k, "k", f)?;
            let p = path_of_bicliques(k)?;
            checks.push(("n = k^2", p.graph.n() == k * k));
            checks.push(("bipartite", p.graph.is_bipartite()));
            extra = json!({ "k": k, "levels": p.levels });
            p.graph
        }
        Family::TruncatedBicliques => {
            let n = need(args.n, "n", f)?;
            if n == 0 {
                bail!("--n must be positive");
            }
            let p = truncated_path_of_bicliques(n);
            checks.push(("n vertices", p.graph.n() == n));
            checks.push(("bipartite", p.graph.is_bipartite()));
            extra = json!({ "levels": p.levels });
            p.graph
        }
        Family::BlowUp => {
            let base = base.context("blow-up reads its base graph from the input")?;
            let l = need(args.l, "l", f)?;
            let ports = match (&args.ports, args.r) {
                (Some(list), _) => parse_vertex_list(list)?,
                (None, Some(r)) => (0..=r).collect(),
                (None, None) => base.vertices().collect(),
            };
            let spec = BlowUpSpec {
                base: base.clone(),
                ports,
                depth: l,
            };
            let b = blow_up(&spec, args.max_vertices)?;
            let nodes = tree_node_count(spec.arity(), l);
            checks.push(("n = |V(G)| (r^(l+1)-1)/(r-1)", b.graph.n() as u128 == nodes * base.n() as u128));
            if base.is_triangle_free() {
                checks.push(("triangle-free preserved", b.graph.is_triangle_free()));
            }
            if base.is_bipartite() {
                checks.push(("bipartite preserved", b.graph.is_bipartite()));
            }
            extra = json!({
                "arity": b.layout.arity,
                "depth": b.layout.depth,
                "tree_nodes": b.layout.nodes,
                "ports": spec.ports,
            });
            b.graph
        }
        Family::RandomTf | Family::RandomBip => {
            let n = need(args.n, "n", f)?;
            if n == 0 {
                bail!("--n must be positive");
            }
            let budget = args.edges.unwrap_or(n);
            let g = if f == Family::RandomTf {
                random_connected_triangle_free(n, budget, seed)
            } else {
                random_connected_bipartite(n, budget, seed)
            };
            if f == Family::RandomTf {
                checks.push(("triangle-free", g.is_triangle_free()));
            } else {
                checks.push(("bipartite", g.is_bipartite()));
            }
            extra = json!({ "edge_budget": budget });
            g
        }
        Family::Path => classic::path(need(args.n, "n", f)?),
        Family::Cycle => {
            let n = need(args.n, "n", f)?;
            if n < 3 {
                bail!("a cycle needs --n >= 3");
            }
            classic::cycle(n)
        }
        Family::Complete => classic::complete(need(args.n, "n", f)?),
        Family::CompleteBipartite => {
            classic::complete_bipartite(need(args.n, "n", f)?, need(args.m, "m", f)?)
        }
        Family::Star => classic::star(need(args.n, "n", f)?),
    };
    if f != Family::Complete && f != Family::Cycle {
        checks.push(("connected", graph.n() == 0 || graph.is_connected()));
    }
    Ok(Generated {
        graph,
        extra,
        checks,
    })
}

pub fn run(args: &Args, mut echo: CommandEcho) -> Outcome {
    if args.format == OutputFormat::EdgeList && args.count > 1 {
        bail!("edge-list output holds one graph; use --format graph6 or json with --count");
    }
    if args.count > 1 && !args.family.is_random() {
        bail!("--count only applies to the random families");
    }
    let seed = args.seed.unwrap_or(DEFAULT_SEED);
    if args.family.is_random() {
        echo.seed = Some(seed);
    }
    let (base, info) = if args.family == Family::BlowUp {
        let (g, info) = input::load_graph(args.input.input.as_deref(), args.input.input_format)?;
        (Some(g), Some(info))
    } else {
        (None, None)
    };

    let mut all_ok = true;
    for i in 0..args.count {
        let start = Instant::now();
        let graph_seed = seed.wrapping_add(i);
        let generated = build(args, graph_seed, base.as_ref())?;
        let g = &generated.graph;
        let mut verification = Verification::new();
        for (name, passed) in &generated.checks {
            verification.check(name, *passed);
        }
        all_ok &= verification.ok;
        if !verification.ok {
            eprintln!("generated graph failed checks: {:?}", verification.failures);
        }
        log::debug!("generated n={} m={} in {:?}", g.n(), g.edge_count(), start.elapsed());
        match args.format {
            OutputFormat::Graph6 => emit(&write_graph6(g)?),
            OutputFormat::EdgeList => emit(write_edge_list(g).trim_end()),
            OutputFormat::Json => {
                let mut result = json!({
                    "kind": "graph",
                    "family": args.family.to_possible_value().expect("named").get_name(),
                    "n": g.n(),
                    "edges": g.edge_count(),
                    "graph6": write_graph6(g)?,
                    "details": generated.extra,
                });
                if args.family.is_random() {
                    result["seed"] = json!(graph_seed);
                }
                let report = RunReport::new(&echo, info.as_ref(), result, verification, start.elapsed());
                if args.count > 1 {
                    report.at(i as usize).print(false);
                } else {
                    report.print(true);
                }
            }
        }
    }
    Ok(all_ok)
}
