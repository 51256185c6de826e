//! Minimum `t(G)` over connected graphs of a class, either by enumerating
//! every labeled graph on `n <= 8` vertices or by scanning a graph6 stream
//! produced by an external enumerator.
//!
//! Native enumeration does no isomorphism reduction. Work is split into
//! independent chunks by fixing the first few adjacency bits; chunk results
//! are merged by a single reducer, so the output does not depend on the
//! number of worker threads.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::tree::max_induced_tree;
use super::ExactError;
use crate::graph::Graph;
use crate::io::{parse_graph6, write_graph6};

pub const NATIVE_MAX_N: usize = 8;
const PREFIX_BITS: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GraphClass {
    #[serde(rename = "trianglefree")]
    TriangleFree,
    #[serde(rename = "bipartite")]
    Bipartite,
}

impl GraphClass {
    pub fn contains(self, g: &Graph) -> bool {
        match self {
            GraphClass::TriangleFree => g.is_triangle_free(),
            GraphClass::Bipartite => g.is_bipartite(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    NativeEnumeration,
    ExternalStream,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OnStreamError {
    Abort,
    Skip,
}

#[derive(Debug, Clone, Copy)]
pub struct FSearchOptions {
    /// Worker threads; 0 lets rayon decide.
    pub jobs: usize,
    /// How many argmin graphs to keep (the count is always exact).
    pub argmin_cap: usize,
    /// Node budget per graph for stream mode.
    pub budget: u64,
    pub on_error: OnStreamError,
}

impl Default for FSearchOptions {
    fn default() -> Self {
        FSearchOptions {
            jobs: 0,
            argmin_cap: 16,
            budget: 50_000_000,
            on_error: OnStreamError::Abort,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StreamIssue {
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FSearchResult {
    pub n: usize,
    pub class: GraphClass,
    /// `None` when no connected member of the class was seen.
    pub value: Option<usize>,
    pub argmin_graphs: Vec<String>,
    pub argmin_count: u64,
    pub graphs_examined: u64,
    pub source: Source,
    pub issues: Vec<StreamIssue>,
}

/// Running minimum with its witnesses.
#[derive(Debug, Default)]
struct Tally {
    value: Option<usize>,
    argmins: Vec<(usize, String)>,
    count: u64,
    examined: u64,
}

impl Tally {
    fn offer(&mut self, t: usize, key: usize, g6: impl FnOnce() -> String) {
        self.examined += 1;
        match self.value {
            Some(v) if t > v => {}
            Some(v) if t == v => {
                self.count += 1;
                self.argmins.push((key, g6()));
            }
            _ => {
                self.value = Some(t);
                self.count = 1;
                self.argmins = vec![(key, g6())];
            }
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.examined += other.examined;
        match (self.value, other.value) {
            (_, None) => self,
            (None, _) => Tally {
                examined: self.examined,
                ..other
            },
            (Some(a), Some(b)) if b < a => Tally {
                examined: self.examined,
                ..other
            },
            (Some(a), Some(b)) if a < b => self,
            _ => {
                self.count += other.count;
                self.argmins.extend(other.argmins);
                self
            }
        }
    }

    fn finish(mut self, n: usize, class: GraphClass, source: Source, cap: usize) -> FSearchResult {
        self.argmins.sort();
        self.argmins.truncate(cap);
        FSearchResult {
            n,
            class,
            value: self.value,
            argmin_graphs: self.argmins.into_iter().map(|(_, s)| s).collect(),
            argmin_count: self.count,
            graphs_examined: self.examined,
            source,
            issues: Vec::new(),
        }
    }
}

fn pool(jobs: usize) -> Result<rayon::ThreadPool, ExactError> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| ExactError::Pool(e.to_string()))
}

/// Every labeled graph on `n` vertices, pruned at the first triangle.
pub fn f_search_native(
    n: usize,
    class: GraphClass,
    opts: &FSearchOptions,
) -> Result<FSearchResult, ExactError> {
    if n > NATIVE_MAX_N {
        return Err(ExactError::TooLarge {
            n,
            cap: NATIVE_MAX_N,
        });
    }
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let prefix = pairs.len().min(PREFIX_BITS);
    let enumerator = Enumerator {
        n,
        class,
        pairs: &pairs,
    };
    let tally = pool(opts.jobs)?.install(|| {
        (0u32..1 << prefix)
            .into_par_iter()
            .map(|bits| {
                let mut tally = Tally::default();
                let mut adj = [0u16; NATIVE_MAX_N];
                let ok = (0..prefix).all(|p| bits >> p & 1 == 0 || enumerator.add(&mut adj, p));
                if ok {
                    enumerator.walk(&mut adj, prefix, bits as u64, &mut tally);
                }
                tally
            })
            .reduce(Tally::default, Tally::merge)
    });
    Ok(tally.finish(n, class, Source::NativeEnumeration, opts.argmin_cap))
}

struct Enumerator<'a> {
    n: usize,
    class: GraphClass,
    pairs: &'a [(usize, usize)],
}

impl Enumerator<'_> {
    /// Adds pair `p`, refusing if it closes a triangle.
    fn add(&self, adj: &mut [u16; NATIVE_MAX_N], p: usize) -> bool {
        let (i, j) = self.pairs[p];
        if adj[i] & adj[j] != 0 {
            return false;
        }
        adj[i] |= 1 << j;
        adj[j] |= 1 << i;
        true
    }

    fn walk(&self, adj: &mut [u16; NATIVE_MAX_N], p: usize, bits: u64, tally: &mut Tally) {
        if p == self.pairs.len() {
            self.leaf(adj, bits, tally);
            return;
        }
        self.walk(adj, p + 1, bits, tally);
        let saved = *adj;
        if self.add(adj, p) {
            self.walk(adj, p + 1, bits | 1 << p, tally);
        }
        *adj = saved;
    }

    fn leaf(&self, adj: &[u16; NATIVE_MAX_N], bits: u64, tally: &mut Tally) {
        let n = self.n;
        let full = (1u32 << n) - 1;
        if !connected(adj, full) {
            return;
        }
        if self.class == GraphClass::Bipartite && !two_colorable(&adj[..n]) {
            return;
        }
        let t = max_tree_by_subsets(&adj[..n]);
        let pairs = self.pairs;
        tally.offer(t, bits as usize, || {
            let g = Graph::from_edges(
                n,
                (0..pairs.len()).filter(|p| bits >> p & 1 == 1).map(|p| pairs[p]),
            )
            .expect("valid graph");
            write_graph6(&g).expect("small graph")
        });
    }
}

fn connected(adj: &[u16], mask: u32) -> bool {
    if mask == 0 {
        return true;
    }
    let mut reached = mask & mask.wrapping_neg();
    loop {
        let mut grown = reached;
        let mut rest = reached;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            grown |= adj[v] as u32 & mask;
        }
        if grown == reached {
            return reached == mask;
        }
        reached = grown;
    }
}

fn two_colorable(adj: &[u16]) -> bool {
    let n = adj.len();
    let mut color = [u8::MAX; NATIVE_MAX_N];
    for s in 0..n {
        if color[s] != u8::MAX {
            continue;
        }
        color[s] = 0;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for w in 0..n {
                if adj[u] >> w & 1 == 0 {
                    continue;
                }
                if color[w] == u8::MAX {
                    color[w] = 1 - color[u];
                    stack.push(w);
                } else if color[w] == color[u] {
                    return false;
                }
            }
        }
    }
    true
}

fn max_tree_by_subsets(adj: &[u16]) -> usize {
    let n = adj.len();
    let mut best = 0;
    for mask in 1u32..1 << n {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let edges: u32 = (0..n)
            .filter(|&v| mask >> v & 1 == 1)
            .map(|v| (adj[v] as u32 & mask).count_ones())
            .sum::<u32>()
            / 2;
        if edges as usize + 1 == size && connected(adj, mask) {
            best = size;
        }
    }
    best
}

/// Scans a graph6 stream (one graph per line), keeping connected members of
/// `class` on exactly `n` vertices. Malformed lines abort the run or are
/// recorded as issues, per `opts.on_error`; so are graphs whose exact search
/// runs out of budget.
pub fn f_search_stream(
    n: usize,
    class: GraphClass,
    text: &str,
    opts: &FSearchOptions,
) -> Result<FSearchResult, ExactError> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && *l != ">>graph6<<")
        .collect();

    enum Outcome {
        Skipped,
        Value(usize),
        Issue(String),
    }
    let outcomes: Vec<(usize, &str, Outcome)> = pool(opts.jobs)?.install(|| {
        lines
            .par_iter()
            .map(|&(line, text)| {
                let outcome = match parse_graph6(text.as_bytes()) {
                    Err(e) => Outcome::Issue(e.to_string()),
                    Ok(g) if g.n() != n || !g.is_connected() || !class.contains(&g) => {
                        Outcome::Skipped
                    }
                    Ok(g) => {
                        let r = max_induced_tree(&g, opts.budget);
                        if r.exhausted {
                            Outcome::Value(r.value)
                        } else {
                            Outcome::Issue(format!(
                                "search budget of {} nodes exhausted",
                                opts.budget
                            ))
                        }
                    }
                };
                (line, text, outcome)
            })
            .collect()
    });

    let mut tally = Tally::default();
    let mut issues = Vec::new();
    for (line, text, outcome) in outcomes {
        match outcome {
            Outcome::Skipped => {}
            Outcome::Value(t) => tally.offer(t, line, || text.to_string()),
            Outcome::Issue(message) => {
                if opts.on_error == OnStreamError::Abort {
                    return Err(ExactError::Stream { line, message });
                }
                issues.push(StreamIssue { line, message });
            }
        }
    }
    let mut result = tally.finish(n, class, Source::ExternalStream, opts.argmin_cap);
    result.issues = issues;
    Ok(result)
}
