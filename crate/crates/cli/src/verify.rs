use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::ValueEnum;
use itree::bound::{parse_rational, to_f64, Rational};
use itree::certify::{check_split, check_up_forest};
use itree::lemmas::{select_up_forest, split_is_or_im};
use itree::view::BipartiteView;
use itree::Graph;
use serde_json::json;

use crate::input::{load_graph, parse_vertex_list};
use crate::report::{CommandEcho, RunReport, Verification};
use crate::{InputArgs, Outcome};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Check {
    /// Up-forest or induced matching in a bipartite view.
    #[value(name = "lemma4", alias = "up-forest")]
    UpForest,
    /// Independent set or induced matching in an induced subgraph.
    #[value(name = "lemma5", alias = "split")]
    Split,
}

#[derive(Debug, clap::Args)]
pub struct Args {
    #[arg(value_enum)]
    check: Check,
    /// Rational parameter, as p/q or a decimal.
    #[arg(long, default_value = "1/2")]
    eta: String,
    /// Top class A of the view; defaults to one side of a 2-coloring.
    #[arg(long)]
    top: Option<String>,
    /// Bottom class B of the view; defaults to the other side.
    #[arg(long)]
    bottom: Option<String>,
    /// Vertex subset for lemma5; defaults to all vertices.
    #[arg(long)]
    subset: Option<String>,
    #[command(flatten)]
    input: InputArgs,
}

fn view_classes(args: &Args, g: &Graph) -> Result<(Vec<usize>, Vec<usize>)> {
    match (&args.top, &args.bottom) {
        (Some(top), Some(bottom)) => Ok((parse_vertex_list(top)?, parse_vertex_list(bottom)?)),
        (None, None) => {
            let side = g
                .two_coloring()
                .context("graph is not bipartite; pass --top and --bottom")?;
            let top = g.vertices().filter(|&v| side[v]).collect();
            let bottom = g.vertices().filter(|&v| !side[v]).collect();
            Ok((top, bottom))
        }
        _ => bail!("--top and --bottom go together"),
    }
}

fn eta_json(eta: &Rational) -> serde_json::Value {
    json!({ "exact": eta.to_string(), "approx": to_f64(eta) })
}

pub fn run(args: &Args, echo: CommandEcho) -> Outcome {
    let start = Instant::now();
    let (g, info) = load_graph(args.input.input.as_deref(), args.input.input_format)?;
    let eta = parse_rational(&args.eta)?;
    let mut verification = Verification::new();
    let result = match args.check {
        Check::UpForest => {
            if args.subset.is_some() {
                bail!("--subset applies to lemma5");
            }
            let (top, bottom) = view_classes(args, &g)?;
            let view = BipartiteView::new(&g, &top, &bottom)?;
            let outcome = select_up_forest(&view, eta)?;
            verification.absorb("outcome", check_up_forest(&g, &top, &bottom, eta, &outcome));
            json!({
                "kind": "lemma",
                "check": "lemma4",
                "eta": eta_json(&eta),
                "a": top.len(),
                "max_degree": view.max_degree(),
                "outcome": outcome,
            })
        }
        Check::Split => {
            if args.top.is_some() || args.bottom.is_some() {
                bail!("--top and --bottom apply to lemma4");
            }
            let subset = match &args.subset {
                Some(list) => parse_vertex_list(list)?,
                None => g.vertices().collect(),
            };
            let outcome = split_is_or_im(&g, &subset, eta)?;
            verification.absorb("outcome", check_split(&g, &subset, eta, &outcome));
            json!({
                "kind": "lemma",
                "check": "lemma5",
                "eta": eta_json(&eta),
                "subset_size": subset.len(),
                "max_degree": g.max_degree_within(&subset),
                "outcome": outcome,
            })
        }
    };
    let report = RunReport::new(&echo, Some(&info), result, verification, start.elapsed());
    report.print(true);
    Ok(report.verification.ok)
}
