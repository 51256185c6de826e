use std::path::PathBuf;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::ValueEnum;
use itree::exact::{
    f_search_native, f_search_stream, max_induced_tree, max_induced_tree_naive, FSearchOptions,
    FSearchResult, GraphClass, OnStreamError, NAIVE_MAX_N,
};
use itree::io::{parse_graph6, Format};
use serde::Deserialize;
use serde_json::json;

use crate::input::{describe, read_text};
use crate::report::{CommandEcho, RunReport, Verification};
use crate::{InputArgs, Outcome};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Class {
    Trianglefree,
    Bipartite,
}

impl From<Class> for GraphClass {
    fn from(c: Class) -> Self {
        match c {
            Class::Trianglefree => GraphClass::TriangleFree,
            Class::Bipartite => GraphClass::Bipartite,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SourceArg {
    /// Every labeled graph on n <= 8 vertices.
    Native,
    /// A graph6 stream from an external enumerator, on the input.
    Stream,
}

#[derive(Debug, clap::Args)]
#[command(group = clap::ArgGroup::new("order").required(true).args(["n", "up_to"]))]
pub struct Args {
    #[arg(long)]
    n: Option<usize>,
    /// Run every order from 1 to this one.
    #[arg(long)]
    up_to: Option<usize>,
    #[arg(long, value_enum)]
    class: Class,
    #[arg(long, value_enum, default_value_t = SourceArg::Native)]
    source: SourceArg,
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// JSON lines with n, class, value and optionally argmin_count to
    /// compare against.
    #[arg(long)]
    golden: Option<PathBuf>,
    /// Record malformed stream lines and continue instead of aborting.
    #[arg(long)]
    keep_going: bool,
    /// Search node cap per streamed graph.
    #[arg(long, default_value_t = 50_000_000)]
    budget: u64,
    /// How many argmin graphs to list.
    #[arg(long, default_value_t = 16)]
    argmin_cap: usize,
    #[command(flatten)]
    input: InputArgs,
}

#[derive(Debug, Deserialize)]
struct GoldenRow {
    n: usize,
    class: GraphClass,
    value: usize,
    argmin_count: Option<u64>,
}

fn load_golden(path: &PathBuf) -> Result<Vec<GoldenRow>> {
    let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| serde_json::from_str(l).with_context(|| format!("golden line {}", i + 1)))
        .collect()
}

fn verify(r: &FSearchResult, golden: &[GoldenRow], budget: u64) -> Result<Verification> {
    let mut v = Verification::new();
    let mut witnesses_ok = true;
    for text in &r.argmin_graphs {
        let g = parse_graph6(text.as_bytes())?;
        let t = if g.n() <= NAIVE_MAX_N {
            Some(max_induced_tree_naive(&g)?.value)
        } else {
            let e = max_induced_tree(&g, budget);
            e.exhausted.then_some(e.value)
        };
        witnesses_ok &= g.n() == r.n && g.is_connected() && r.class.contains(&g) && t == r.value;
    }
    v.check("argmin graphs are connected class members with t = value", witnesses_ok);
    v.check("argmin graphs listed when a value exists", r.value.is_none() || !r.argmin_graphs.is_empty());
    if let Some(row) = golden.iter().find(|row| row.n == r.n && row.class == r.class) {
        v.check("value matches golden", r.value == Some(row.value));
        if let (Some(count), itree::exact::Source::NativeEnumeration) = (row.argmin_count, r.source) {
            v.check("argmin count matches golden", r.argmin_count == count);
        }
    }
    Ok(v)
}

pub fn run(args: &Args, echo: CommandEcho) -> Outcome {
    let orders: Vec<usize> = match (args.n, args.up_to) {
        (Some(n), _) => vec![n],
        (None, Some(m)) => (1..=m).collect(),
        (None, None) => unreachable!("clap requires one of --n and --up-to"),
    };
    if orders.contains(&0) {
        bail!("orders start at 1");
    }
    let golden = match &args.golden {
        Some(p) => load_golden(p)?,
        None => Vec::new(),
    };
    let stream = match args.source {
        SourceArg::Stream => {
            let text = read_text(args.input.input.as_deref())?;
            let info = describe(&text, text.lines().filter(|l| !l.trim().is_empty()).count(), Format::Graph6);
            Some((text, info))
        }
        SourceArg::Native => None,
    };
    let opts = FSearchOptions {
        jobs: args.jobs,
        argmin_cap: args.argmin_cap,
        budget: args.budget,
        on_error: if args.keep_going {
            OnStreamError::Skip
        } else {
            OnStreamError::Abort
        },
    };

    let mut all_ok = true;
    for n in orders {
        let start = Instant::now();
        let r = match &stream {
            Some((text, _)) => f_search_stream(n, args.class.into(), text, &opts)?,
            None => f_search_native(n, args.class.into(), &opts)?,
        };
        for issue in &r.issues {
            eprintln!("warning: stream line {}: {}", issue.line, issue.message);
        }
        let verification = verify(&r, &golden, args.budget)?;
        all_ok &= verification.ok;
        let mut result = serde_json::to_value(&r)?;
        result["kind"] = json!("fsearch");
        RunReport::new(&echo, stream.as_ref().map(|(_, info)| info), result, verification, start.elapsed())
            .print(false);
    }
    Ok(all_ok)
}
