//! Certificate-producing induced-tree extraction for connected bipartite and
//! triangle-free graphs.
//!
//! Both extractors share one skeleton. Fix a root and its BFS levels
//! `L_0, L_1, ...`. A vertex of degree `>= t - 1` gives a star; a vertex at
//! distance `t` gives an induced path on `t + 1` vertices. Otherwise there
//! are at most `t` levels, so the largest of them, `L_k` (the first one on
//! ties), holds at least `n / t` vertices. Starting from `M_k ⊆ L_k`, the extractor descends towards the
//! root, choosing `M_{i-1} ⊆ L_{i-1}` with the up-forest dichotomy so that
//! the union of the chosen sets stays an induced forest in which every
//! component meets the current level at most once. It stops at the first
//! level where a single vertex remains; that vertex's component is the tree.
//!
//! Each branching step (and each double step) at least doubles the number of
//! top-level vertices hanging below a bottom vertex, so the tree has at least
//! `2^b` vertices where `b` counts those steps. The returned trace records
//! every set and every size bound so that the claim can be re-checked.

use serde::Serialize;
use thiserror::Error;

use crate::bound::{int, pow, Bound, Rational};
use crate::graph::{greedy_independent_set, Graph, GraphError, Vertex};
use crate::lemmas::{select_up_forest, split_is_or_im, LemmaCase, LemmaError, SelectionOutcome};
use crate::levels::{bfs_levels, LevelDecomposition};
use crate::view::{BipartiteView, ViewError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtractError {
    #[error("input graph is not connected")]
    Disconnected,
    #[error("input graph is not bipartite")]
    NotBipartite,
    #[error("input graph contains a triangle")]
    Triangle,
    #[error("target size t = {0} is below the minimum of 3")]
    TargetTooSmall(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl From<LemmaError> for ExtractError {
    fn from(e: LemmaError) -> Self {
        ExtractError::Invariant(format!("selection lemma failed: {e}"))
    }
}

impl From<ViewError> for ExtractError {
    fn from(e: ViewError) -> Self {
        ExtractError::Invariant(format!("bad bipartite view: {e}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Bipartite,
    TriangleFree,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExtractOptions {
    pub t: usize,
    pub root: Vertex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StepKind {
    Matching,
    Branching,
    Double,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StepRecord {
    pub kind: StepKind,
    pub from_level: usize,
    pub to_level: usize,
    pub size_before: usize,
    pub size_after: usize,
    pub lemma_cases: Vec<LemmaCase>,
    pub bounds: Vec<Bound>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LevelSet {
    pub level: usize,
    pub vertices: Vec<Vertex>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtractionTrace {
    pub mode: Mode,
    pub t: usize,
    pub root: Vertex,
    pub level_sizes: Vec<usize>,
    pub k: usize,
    pub ell: usize,
    pub initial_bounds: Vec<Bound>,
    pub steps: Vec<StepRecord>,
    /// `M_k, M_{k-1}, ..., M_ell`, one entry per level.
    pub level_sets: Vec<LevelSet>,
}

impl ExtractionTrace {
    /// Number of branching steps plus double steps.
    pub fn b(&self) -> usize {
        self.steps
            .iter()
            .filter(|s| s.kind != StepKind::Matching)
            .count()
    }

    pub fn matching_steps(&self) -> usize {
        self.steps.len() - self.b()
    }

    /// `2^b`, saturating.
    pub fn guaranteed_size(&self) -> u128 {
        1u128.checked_shl(self.b() as u32).unwrap_or(u128::MAX)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Provenance {
    /// A vertex of degree at least `t - 1` with all its neighbors.
    Star { center: Vertex },
    /// A shortest path from the root to the lowest vertex at distance `t`.
    InducedPath { end: Vertex },
    LevelConstruction { b: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreeCertificate {
    pub vertices: Vec<Vertex>,
    pub provenance: Provenance,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Extraction {
    pub tree: TreeCertificate,
    pub trace: Option<ExtractionTrace>,
}

/// `max(2, ⌈exp(c sqrt(ln n))⌉)`.
pub fn default_target_size(n: usize, c: f64) -> usize {
    let ln = (n.max(1) as f64).ln();
    let t = (c * ln.sqrt()).exp().ceil();
    if t.is_finite() && t < usize::MAX as f64 {
        (t as usize).max(2)
    } else {
        usize::MAX
    }
}

/// Extraction for connected bipartite graphs: `M_k = L_k` and every descent
/// step is a matching step (`|M_{i-1}| >= (1 - 1/t)|M_i|`) or a branching
/// step (`|M_{i-1}| >= |M_i| / t^4`).
pub fn extract_bipartite(g: &Graph, opts: ExtractOptions) -> Result<Extraction, ExtractError> {
    validate(g, opts)?;
    if !g.is_bipartite() {
        return Err(ExtractError::NotBipartite);
    }
    run(g, opts, Mode::Bipartite)
}

/// Extraction for connected triangle-free graphs. Levels may now contain
/// edges, so every chosen set is thinned to an independent set, and when the
/// matching case leaves an induced matching rather than a large independent
/// set, the extractor contracts its edges and descends two levels at once.
pub fn extract_triangle_free(g: &Graph, opts: ExtractOptions) -> Result<Extraction, ExtractError> {
    validate(g, opts)?;
    if !g.is_triangle_free() {
        return Err(ExtractError::Triangle);
    }
    run(g, opts, Mode::TriangleFree)
}

fn validate(g: &Graph, opts: ExtractOptions) -> Result<(), ExtractError> {
    if opts.t < 3 {
        return Err(ExtractError::TargetTooSmall(opts.t));
    }
    g.check_vertex(opts.root)?;
    if !g.is_connected() {
        return Err(ExtractError::Disconnected);
    }
    Ok(())
}

fn run(g: &Graph, opts: ExtractOptions, mode: Mode) -> Result<Extraction, ExtractError> {
    let t = opts.t;
    if g.max_degree() + 1 >= t {
        let center = g
            .vertices()
            .find(|&v| g.degree(v) == g.max_degree())
            .expect("graph is nonempty");
        let mut vertices = g.neighbors(center).to_vec();
        vertices.push(center);
        vertices.sort_unstable();
        return Ok(Extraction {
            tree: TreeCertificate {
                vertices,
                provenance: Provenance::Star { center },
            },
            trace: None,
        });
    }

    let levels = bfs_levels(g, opts.root)?;
    if levels.len() > t {
        let end = levels.level(t)[0];
        let mut vertices = vec![end];
        let mut v = end;
        while let Some(p) = levels.parent(g, v) {
            vertices.push(p);
            v = p;
        }
        vertices.sort_unstable();
        return Ok(Extraction {
            tree: TreeCertificate {
                vertices,
                provenance: Provenance::InducedPath { end },
            },
            trace: None,
        });
    }

    let (tree, trace) = Descent::new(g, &levels, mode, t).run()?;
    Ok(Extraction {
        tree: TreeCertificate {
            vertices: tree,
            provenance: Provenance::LevelConstruction { b: trace.b() },
        },
        trace: Some(trace),
    })
}

struct Descent<'a> {
    g: &'a Graph,
    levels: &'a LevelDecomposition,
    mode: Mode,
    t: usize,
    eta: Rational,
    steps: Vec<StepRecord>,
    sets: Vec<LevelSet>,
    union: Vec<Vertex>,
}

impl<'a> Descent<'a> {
    fn new(g: &'a Graph, levels: &'a LevelDecomposition, mode: Mode, t: usize) -> Self {
        Descent {
            g,
            levels,
            mode,
            t,
            eta: Rational::new(1, t as u128),
            steps: Vec::new(),
            sets: Vec::new(),
            union: Vec::new(),
        }
    }

    fn run(mut self) -> Result<(Vec<Vertex>, ExtractionTrace), ExtractError> {
        let n = self.g.n();
        let t = self.t;
        let sizes = self.levels.sizes();
        let largest = sizes.iter().copied().max().unwrap_or(0);
        let k = sizes.iter().position(|&s| s == largest).unwrap_or(0);
        if largest * t < n {
            return Err(invariant("no level holds n/t vertices"));
        }
        let top = self.levels.level(k);
        let mut initial_bounds = vec![Bound::new("|L_k| >= n/t", top.len(), Rational::new(n as u128, t as u128))];
        let start = match self.mode {
            Mode::Bipartite => top.to_vec(),
            Mode::TriangleFree => {
                let m = greedy_independent_set(self.g, top);
                initial_bounds.push(Bound::new("|M_k| >= |L_k|/t", m.len(), Rational::new(top.len() as u128, t as u128)));
                m
            }
        };
        self.push_set(k, start)?;

        let mut level = k;
        while self.current().len() > 1 {
            if level == 0 {
                return Err(invariant("reached the root level with more than one vertex"));
            }
            level = self.step(level)?;
        }

        let last = self.current()[0];
        let tree = self.g.component_within(&self.union, last);
        let trace = ExtractionTrace {
            mode: self.mode,
            t,
            root: self.levels.root(),
            level_sizes: self.levels.sizes(),
            k,
            ell: level,
            initial_bounds,
            steps: self.steps,
            level_sets: self.sets,
        };
        if (tree.len() as u128) < trace.guaranteed_size() {
            return Err(invariant("tree is smaller than 2^b"));
        }
        if trace.matching_steps() > k {
            return Err(invariant("more matching steps than levels"));
        }
        Ok((tree, trace))
    }

    fn current(&self) -> &[Vertex] {
        &self.sets.last().expect("at least M_k").vertices
    }

    fn push_set(&mut self, level: usize, mut vertices: Vec<Vertex>) -> Result<(), ExtractError> {
        vertices.sort_unstable();
        if vertices.is_empty() {
            return Err(invariant("selected an empty level set"));
        }
        self.union.extend_from_slice(&vertices);
        if !self.g.is_forest(&self.union) {
            return Err(invariant("chosen level sets no longer induce a forest"));
        }
        self.sets.push(LevelSet { level, vertices });
        Ok(())
    }

    /// One descent from `level`; returns the new current level.
    fn step(&mut self, level: usize) -> Result<usize, ExtractError> {
        let t = self.t;
        let before = self.current().to_vec();
        let size_before = before.len();
        let view = BipartiteView::new(self.g, &before, self.levels.level(level - 1))?;
        let outcome = select_up_forest(&view, self.eta)?;
        let raw = outcome.forest().expect("up-forest outcome").bottom.clone();
        let mut cases = vec![outcome.case()];
        let mut bounds = vec![outcome.bound().clone()];
        let one_minus = int(1) - self.eta;

        let (kind, next) = match (self.mode, outcome.case()) {
            (Mode::Bipartite, LemmaCase::Matching) => {
                bounds.push(Bound::new("|M_{i-1}| >= (1-1/t)|M_i|", raw.len(), one_minus * int(size_before)));
                (StepKind::Matching, raw)
            }
            (Mode::Bipartite, _) => {
                bounds.push(Bound::new("|M_{i-1}| >= |M_i|/t^4", raw.len(), int(size_before) / pow(t, 4)));
                (StepKind::Branching, raw)
            }
            (Mode::TriangleFree, LemmaCase::Branching) => {
                let next = greedy_independent_set(self.g, &raw);
                bounds.push(Bound::new("|M'_{i-1}| >= |M_i|/t^4", raw.len(), int(size_before) / pow(t, 4)));
                bounds.push(Bound::new("|M_{i-1}| >= |M_i|/t^5", next.len(), int(size_before) / pow(t, 5)));
                (StepKind::Branching, next)
            }
            (Mode::TriangleFree, _) => {
                bounds.push(Bound::new("|M'_{i-1}| >= (1-1/t)|M_i|", raw.len(), one_minus * int(size_before)));
                let split = split_is_or_im(self.g, &raw, self.eta)?;
                cases.push(split.case());
                bounds.push(split.bound().clone());
                match split {
                    SelectionOutcome::IndependentSet { vertices, .. } => {
                        bounds.push(Bound::new(
                            "|M_{i-1}| >= (1-1/t)^2 |M_i|",
                            vertices.len(),
                            one_minus * one_minus * int(size_before),
                        ));
                        (StepKind::Matching, vertices)
                    }
                    SelectionOutcome::InducedMatching { edges, .. } => {
                        return self.double_step(level, size_before, edges, cases, bounds);
                    }
                    _ => unreachable!("split_is_or_im returns IS or IM"),
                }
            }
        };

        let size_after = next.len();
        self.push_set(level - 1, next)?;
        self.steps.push(StepRecord {
            kind,
            from_level: level,
            to_level: level - 1,
            size_before,
            size_after,
            lemma_cases: cases,
            bounds,
        });
        Ok(level - 1)
    }

    /// Keeps the induced matching as `M_{i-1}`, contracts each of its edges
    /// to a single top vertex over `L_{i-2}`, and selects `M_{i-2}` there.
    fn double_step(
        &mut self,
        level: usize,
        size_before: usize,
        pairs: Vec<(Vertex, Vertex)>,
        mut cases: Vec<LemmaCase>,
        mut bounds: Vec<Bound>,
    ) -> Result<usize, ExtractError> {
        if level < 2 {
            return Err(invariant("induced matching directly below the root"));
        }
        let t = self.t;
        let bottom = self.levels.level(level - 2);
        let p = pairs.len();
        let mut slot = vec![usize::MAX; self.g.n()];
        for (j, &w) in bottom.iter().enumerate() {
            slot[w] = p + j;
        }
        let mut edges = Vec::new();
        for (j, &(u, u2)) in pairs.iter().enumerate() {
            for x in [u, u2] {
                for &w in self.g.neighbors(x) {
                    if slot[w] != usize::MAX {
                        if self.g.has_edge(u, w) && self.g.has_edge(u2, w) {
                            return Err(invariant("contracted edge sees a vertex twice"));
                        }
                        edges.push((j, slot[w]));
                    }
                }
            }
        }
        let contracted = Graph::from_edges(p + bottom.len(), edges)?;
        let top_ids: Vec<Vertex> = (0..p).collect();
        let bottom_ids: Vec<Vertex> = (p..p + bottom.len()).collect();
        let view = BipartiteView::new(&contracted, &top_ids, &bottom_ids)?;
        let outcome = select_up_forest(&view, Rational::new(1, 2))?;
        cases.push(outcome.case());
        bounds.push(outcome.bound().clone());

        let middle: Vec<Vertex> = pairs.iter().flat_map(|&(u, u2)| [u, u2]).collect();
        let raw: Vec<Vertex> = outcome
            .forest()
            .expect("up-forest outcome")
            .bottom
            .iter()
            .map(|&id| bottom[id - p])
            .collect();
        let next = greedy_independent_set(self.g, &raw);
        bounds.push(Bound::new(
            "|M_{i-1}| >= (1-1/t)|M_i|/t^2",
            middle.len(),
            (int(1) - self.eta) * int(size_before) / pow(t, 2),
        ));
        bounds.push(Bound::new("|M'_{i-2}| >= |M_{i-1}|/(32 t^3)", raw.len(), int(middle.len()) / (int(32) * pow(t, 3))));
        bounds.push(Bound::new("|M_{i-2}| >= |M'_{i-2}|/t", next.len(), Rational::new(raw.len() as u128, t as u128)));
        bounds.push(Bound::new("|M_{i-2}| >= |M_i|/t^7", next.len(), int(size_before) / pow(t, 7)));

        let size_after = next.len();
        self.push_set(level - 1, middle)?;
        self.push_set(level - 2, next)?;
        self.steps.push(StepRecord {
            kind: StepKind::Double,
            from_level: level,
            to_level: level - 2,
            size_before,
            size_after,
            lemma_cases: cases,
            bounds,
        });
        Ok(level - 2)
    }
}

fn invariant(what: &str) -> ExtractError {
    ExtractError::Invariant(what.to_string())
}
