//! Independent re-checking of lemma outcomes and extraction certificates.
//!
//! Nothing here trusts the producing code: sets are re-validated against the
//! graph from the definitions and every threshold is recomputed from the
//! recorded sizes.

use serde::Serialize;

use crate::bound::{int, pow, Rational};
use crate::extract::{Extraction, Mode, Provenance, StepKind};
use crate::graph::{Graph, Vertex};
use crate::lemmas::{SelectionOutcome, UpForest};
use crate::levels::bfs_levels;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub ok: bool,
    pub failures: Vec<String>,
}

#[derive(Default)]
struct Checker {
    failures: Vec<String>,
}

impl Checker {
    fn require(&mut self, cond: bool, what: impl FnOnce() -> String) {
        if !cond {
            self.failures.push(what());
        }
    }

    fn at_least(&mut self, label: &str, achieved: usize, required: Rational) {
        self.require(int(achieved) >= required, || {
            format!("{label}: {achieved} < {required}")
        });
    }

    fn finish(self) -> Verdict {
        Verdict {
            ok: self.failures.is_empty(),
            failures: self.failures,
        }
    }
}

fn members(n: usize, set: &[Vertex]) -> Vec<bool> {
    let mut m = vec![false; n];
    for &v in set {
        m[v] = true;
    }
    m
}

fn distinct(set: &[Vertex]) -> bool {
    let mut s = set.to_vec();
    s.sort_unstable();
    s.windows(2).all(|w| w[0] != w[1])
}

/// Checks an outcome of the up-forest dichotomy on the view with top class
/// `top` and bottom class `bottom` of `g`, with parameter `eta`.
pub fn check_up_forest(
    g: &Graph,
    top: &[Vertex],
    bottom: &[Vertex],
    eta: Rational,
    outcome: &SelectionOutcome,
) -> Verdict {
    let mut c = Checker::default();
    let n = g.n();
    let in_top = members(n, top);
    let in_bottom = members(n, bottom);
    let a = top.iter().filter(|&&v| in_top[v]).count();
    let view_degree = |v: Vertex| {
        let other = if in_top[v] { &in_bottom } else { &in_top };
        g.neighbors(v).iter().filter(|&&w| other[w]).count()
    };
    let max_degree = top.iter().chain(bottom).map(|&v| view_degree(v)).max().unwrap_or(0);

    let (forest, min_bottom_degree): (&UpForest, usize) = match outcome {
        SelectionOutcome::Matching { forest, .. } => (forest, 1),
        SelectionOutcome::Branching { forest, .. } => (forest, 2),
        other => {
            c.require(false, || format!("unexpected outcome {:?}", other.case()));
            return c.finish();
        }
    };
    let f_bottom = members(n, &forest.bottom);
    c.require(distinct(&forest.top) && distinct(&forest.bottom), || "repeated forest vertex".into());
    c.require(forest.top.iter().all(|&v| in_top[v]), || "A(F) not inside A".into());
    c.require(forest.bottom.iter().all(|&v| in_bottom[v]), || "B(F) not inside B".into());

    // induced: the forest edges are exactly the view edges inside A(F) ∪ B(F)
    let mut induced: Vec<(Vertex, Vertex)> = forest
        .top
        .iter()
        .flat_map(|&x| g.neighbors(x).iter().filter(|&&w| f_bottom[w]).map(move |&w| (x, w)))
        .collect();
    induced.sort_unstable();
    let mut claimed = forest.edges.clone();
    claimed.sort_unstable();
    c.require(induced == claimed, || "forest is not the induced subgraph on its vertices".into());

    let mut degree = vec![0usize; n];
    for &(x, w) in &induced {
        degree[x] += 1;
        degree[w] += 1;
    }
    c.require(forest.top.iter().all(|&x| degree[x] == 1), || "a top vertex has forest degree != 1".into());
    c.require(
        forest.bottom.iter().all(|&w| degree[w] >= min_bottom_degree),
        || format!("a bottom vertex has forest degree < {min_bottom_degree}"),
    );
    if min_bottom_degree == 1 {
        c.require(forest.bottom.iter().all(|&w| degree[w] == 1), || "matching vertex of degree > 1".into());
    }
    let all: Vec<Vertex> = forest.top.iter().chain(&forest.bottom).copied().collect();
    c.require(bipartite_forest(g, &in_top, &in_bottom, &all), || "forest has a cycle".into());

    match outcome {
        SelectionOutcome::Matching { .. } => {
            c.at_least("matching edges >= (1-eta)a", induced.len(), (int(1) - eta) * int(a))
        }
        _ => c.at_least(
            "b(F) >= eta a / Delta^3",
            forest.bottom.len(),
            eta * int(a) / pow(max_degree.max(1), 3),
        ),
    }
    c.finish()
}

/// Acyclicity of the `A`–`B` edges induced by `set`.
fn bipartite_forest(g: &Graph, in_top: &[bool], in_bottom: &[bool], set: &[Vertex]) -> bool {
    let inside = members(g.n(), set);
    let cross = |v: Vertex, w: Vertex| inside[w] && (in_top[v] && in_bottom[w] || in_bottom[v] && in_top[w]);
    let edges: usize = set
        .iter()
        .map(|&v| g.neighbors(v).iter().filter(|&&w| cross(v, w)).count())
        .sum::<usize>()
        / 2;
    let mut seen = vec![false; g.n()];
    let mut components = 0;
    for &s in set {
        if seen[s] {
            continue;
        }
        components += 1;
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &w in g.neighbors(v) {
                if cross(v, w) && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    edges + components == set.len()
}

/// Checks an outcome of the independent-set / induced-matching dichotomy on
/// the subgraph of `g` induced by `set`.
pub fn check_split(g: &Graph, set: &[Vertex], eta: Rational, outcome: &SelectionOutcome) -> Verdict {
    let mut c = Checker::default();
    let mut set = set.to_vec();
    set.sort_unstable();
    set.dedup();
    let inside = members(g.n(), &set);
    let n = set.len();
    let max_degree = set
        .iter()
        .map(|&v| g.neighbors(v).iter().filter(|&&w| inside[w]).count())
        .max()
        .unwrap_or(0);
    match outcome {
        SelectionOutcome::IndependentSet { vertices, .. } => {
            c.require(distinct(vertices), || "repeated vertex".into());
            c.require(vertices.iter().all(|&v| inside[v]), || "vertex outside the subset".into());
            let chosen = members(g.n(), vertices);
            c.require(
                vertices.iter().all(|&v| g.neighbors(v).iter().all(|&w| !chosen[w])),
                || "set is not independent".into(),
            );
            c.at_least("independent set >= (1-eta)n", vertices.len(), (int(1) - eta) * int(n));
        }
        SelectionOutcome::InducedMatching { edges, .. } => {
            let ends: Vec<Vertex> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
            c.require(distinct(&ends), || "matching edges share a vertex".into());
            c.require(ends.iter().all(|&v| inside[v]), || "endpoint outside the subset".into());
            c.require(edges.iter().all(|&(u, v)| g.has_edge(u, v)), || "not an edge".into());
            let chosen = members(g.n(), &ends);
            let induced: usize = ends
                .iter()
                .map(|&v| g.neighbors(v).iter().filter(|&&w| chosen[w]).count())
                .sum::<usize>()
                / 2;
            c.require(induced == edges.len(), || "matching is not induced".into());
            c.at_least(
                "induced matching >= eta n / (2 Delta)",
                edges.len(),
                eta * int(n) / int(2 * max_degree.max(1)),
            );
        }
        other => c.require(false, || format!("unexpected outcome {:?}", other.case())),
    }
    c.finish()
}

/// Re-checks an extraction result against `g` and the target size `t`.
pub fn check_extraction(g: &Graph, t: usize, extraction: &Extraction) -> Verdict {
    let mut c = Checker::default();
    let tree = &extraction.tree.vertices;
    c.require(tree.iter().all(|&v| v < g.n()), || "vertex out of range".into());
    if !c.failures.is_empty() {
        return c.finish();
    }
    c.require(g.is_induced_tree(tree), || "certificate does not induce a tree".into());

    match (&extraction.tree.provenance, &extraction.trace) {
        (Provenance::Star { center }, _) => {
            c.require(g.degree(*center) + 1 >= t, || "star center degree below t-1".into());
            let mut closed = g.neighbors(*center).to_vec();
            closed.push(*center);
            closed.sort_unstable();
            c.require(&closed == tree, || "star is not the closed neighborhood".into());
        }
        (Provenance::InducedPath { .. }, _) => {
            c.require(tree.len() == t + 1, || format!("path has {} vertices, expected {}", tree.len(), t + 1));
        }
        (Provenance::LevelConstruction { b }, Some(trace)) => {
            check_trace(g, t, tree, *b, trace, &mut c);
        }
        (Provenance::LevelConstruction { .. }, None) => {
            c.require(false, || "level construction without a trace".into());
        }
    }
    c.finish()
}

fn check_trace(
    g: &Graph,
    t: usize,
    tree: &[Vertex],
    b: usize,
    trace: &crate::extract::ExtractionTrace,
    c: &mut Checker,
) {
    let n = g.n();
    c.require(trace.t == t, || "trace was produced for a different t".into());
    let Ok(levels) = bfs_levels(g, trace.root) else {
        c.require(false, || "trace root out of range".into());
        return;
    };
    c.require(levels.sizes() == trace.level_sizes, || "level sizes differ from BFS".into());
    c.require(levels.len() <= t, || "more than t levels".into());
    c.at_least("|L_k| >= n/t", levels.level(trace.k).len(), Rational::new(n as u128, t as u128));

    let sets = &trace.level_sets;
    c.require(!sets.is_empty(), || "no level sets".into());
    for (offset, set) in sets.iter().enumerate() {
        c.require(set.level + offset == trace.k, || "level sets are not consecutive from k".into());
        c.require(!set.vertices.is_empty(), || format!("M_{} is empty", set.level));
        c.require(
            set.vertices.iter().all(|&v| levels.level_of(v) == Some(set.level)),
            || format!("M_{} leaves its level", set.level),
        );
    }
    if !c.failures.is_empty() {
        return;
    }
    let last = sets.last().expect("checked nonempty");
    c.require(last.level == trace.ell && last.vertices.len() == 1, || "descent does not end in one vertex at ell".into());

    let union: Vec<Vertex> = sets.iter().flat_map(|s| s.vertices.iter().copied()).collect();
    c.require(g.is_forest(&union), || "level sets do not induce a forest".into());
    let component = g.component_within(&union, last.vertices[0]);
    c.require(component == tree, || "tree is not the component of the last vertex".into());

    let branching = trace.steps.iter().filter(|s| s.kind != StepKind::Matching).count();
    c.require(branching == b, || "b differs from the step list".into());
    c.require(
        b >= 128 || tree.len() as u128 >= 1u128 << b,
        || format!("tree has {} < 2^{b} vertices", tree.len()),
    );
    c.require(trace.steps.len() - branching <= trace.k, || "more matching steps than k".into());

    let set_at = |level: usize| sets.get(trace.k - level).map(|s| s.vertices.as_slice());
    let one_minus = int(1) - Rational::new(1, t as u128);
    let mut expected_level = trace.k;
    for step in &trace.steps {
        let drop = if step.kind == StepKind::Double { 2 } else { 1 };
        c.require(
            step.from_level == expected_level && step.to_level + drop == step.from_level,
            || format!("step from {} to {} is out of sequence", step.from_level, step.to_level),
        );
        expected_level = step.to_level;
        let (Some(from), Some(to)) = (set_at(step.from_level), set_at(step.to_level)) else {
            c.require(false, || "step refers to a missing level set".into());
            continue;
        };
        c.require(
            step.size_before == from.len() && step.size_after == to.len(),
            || "recorded step sizes differ from the level sets".into(),
        );
        for bound in &step.bounds {
            c.require(bound.holds(), || format!("recorded bound fails: {}", bound.label));
        }
        let before = int(from.len());
        let required = match (trace.mode, step.kind) {
            (Mode::Bipartite, StepKind::Matching) => one_minus * before,
            (Mode::Bipartite, _) => before / pow(t, 4),
            (Mode::TriangleFree, StepKind::Matching) => one_minus * one_minus * before,
            (Mode::TriangleFree, StepKind::Branching) => before / pow(t, 5),
            (Mode::TriangleFree, StepKind::Double) => before / pow(t, 7),
        };
        c.at_least("step size guarantee", to.len(), required);

        let from_members = members(n, from);
        match step.kind {
            StepKind::Matching | StepKind::Branching => {
                let need = if step.kind == StepKind::Branching { 2 } else { 1 };
                c.require(
                    to.iter().all(|&v| g.neighbors(v).iter().filter(|&&w| from_members[w]).count() >= need),
                    || format!("a vertex of M_{} has fewer than {need} successors", step.to_level),
                );
            }
            StepKind::Double => {
                let middle = set_at(step.from_level - 1).unwrap_or(&[]);
                for &v in to {
                    let mut local: Vec<Vertex> = from.iter().chain(middle).copied().collect();
                    local.push(v);
                    let reach = g.component_within(&local, v);
                    let successors = reach.iter().filter(|&&w| from_members[w]).count();
                    c.require(successors >= 2, || format!("vertex {v} has fewer than 2 successors two levels up"));
                }
            }
        }
    }
    c.require(expected_level == trace.ell, || "steps do not reach ell".into());

    if trace.mode == Mode::TriangleFree {
        let doubled: Vec<usize> = trace
            .steps
            .iter()
            .filter(|s| s.kind == StepKind::Double)
            .map(|s| s.from_level - 1)
            .collect();
        for set in sets.iter().filter(|s| !doubled.contains(&s.level)) {
            c.require(g.is_independent(&set.vertices), || format!("M_{} is not independent", set.level));
        }
    }
}
