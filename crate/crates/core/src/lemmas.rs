//! The two selection dichotomies the extractors descend with.
//!
//! [`select_up_forest`] looks at a bipartite view (top `A`, bottom `B`) and
//! returns either a large induced matching or a 2-branching up-forest.
//! [`split_is_or_im`] looks at an arbitrary induced subgraph and returns
//! either a large independent set or a large induced matching. Both are the
//! greedy constructions whose sizes are guaranteed, not optimal ones.

use serde::Serialize;
use thiserror::Error;

use crate::bound::{int, pow, Bound, Rational};
use crate::graph::{Graph, GraphError, Vertex};
use crate::view::BipartiteView;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LemmaError {
    #[error("top vertex {0} has no neighbor in the bottom class")]
    IsolatedTop(Vertex),
    #[error("eta = {0} is outside the allowed range")]
    EtaOutOfRange(Rational),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Which side of a dichotomy fired.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LemmaCase {
    Matching,
    Branching,
    IndependentSet,
    InducedMatching,
}

/// An induced forest of a bipartite view in which every top vertex has
/// exactly one forest neighbor. Edges are stored as `(top, bottom)`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct UpForest {
    pub top: Vec<Vertex>,
    pub bottom: Vec<Vertex>,
    pub edges: Vec<(Vertex, Vertex)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "case", rename_all = "snake_case")]
pub enum SelectionOutcome {
    /// An induced matching between `A` and `B`, as an up-forest whose
    /// bottom vertices all have degree 1.
    Matching { forest: UpForest, bound: Bound },
    /// An up-forest whose bottom vertices all have degree at least 2.
    Branching { forest: UpForest, bound: Bound },
    IndependentSet { vertices: Vec<Vertex>, bound: Bound },
    InducedMatching {
        edges: Vec<(Vertex, Vertex)>,
        bound: Bound,
    },
}

impl SelectionOutcome {
    pub fn case(&self) -> LemmaCase {
        match self {
            SelectionOutcome::Matching { .. } => LemmaCase::Matching,
            SelectionOutcome::Branching { .. } => LemmaCase::Branching,
            SelectionOutcome::IndependentSet { .. } => LemmaCase::IndependentSet,
            SelectionOutcome::InducedMatching { .. } => LemmaCase::InducedMatching,
        }
    }

    pub fn bound(&self) -> &Bound {
        match self {
            SelectionOutcome::Matching { bound, .. }
            | SelectionOutcome::Branching { bound, .. }
            | SelectionOutcome::IndependentSet { bound, .. }
            | SelectionOutcome::InducedMatching { bound, .. } => bound,
        }
    }

    pub fn forest(&self) -> Option<&UpForest> {
        match self {
            SelectionOutcome::Matching { forest, .. }
            | SelectionOutcome::Branching { forest, .. } => Some(forest),
            _ => None,
        }
    }
}

/// Matching or 2-branching up-forest.
///
/// Let `B'` be the bottom vertices of view-degree 1. If at least
/// `(1 - eta) a` top vertices have a neighbor in `B'`, each of them keeps its
/// lowest such neighbor and the result is an induced matching. Otherwise
/// stars are picked greedily around the bottom vertices of degree >= 2:
/// the lowest remaining candidate `v` takes all its top neighbors, and every
/// bottom vertex adjacent to one of those is dropped from the candidates.
/// That removes at most `Δ^2` candidates per star, leaving at least
/// `eta a / Δ^3` stars.
pub fn select_up_forest(
    view: &BipartiteView<'_>,
    eta: Rational,
) -> Result<SelectionOutcome, LemmaError> {
    if eta == int(0) || eta >= int(1) {
        return Err(LemmaError::EtaOutOfRange(eta));
    }
    let g = view.base();
    let a = view.top().len();
    let mut degree = vec![0usize; g.n()];
    for &x in view.top() {
        for b in view.across(x) {
            degree[x] += 1;
            degree[b] += 1;
        }
        if degree[x] == 0 {
            return Err(LemmaError::IsolatedTop(x));
        }
    }

    let mut matching = UpForest::default();
    for &x in view.top() {
        if let Some(b) = view.across(x).find(|&b| degree[b] == 1) {
            matching.top.push(x);
            matching.bottom.push(b);
            matching.edges.push((x, b));
        }
    }
    let required = (int(1) - eta) * int(a);
    if int(matching.top.len()) >= required {
        matching.bottom.sort_unstable();
        let bound = Bound::new("matching edges >= (1-eta)a", matching.edges.len(), required);
        return Ok(SelectionOutcome::Matching {
            forest: matching,
            bound,
        });
    }

    let max_degree = view.max_degree();
    let mut candidate = vec![false; g.n()];
    for &b in view.bottom() {
        candidate[b] = degree[b] >= 2;
    }
    let mut forest = UpForest::default();
    for &v in view.bottom() {
        if !candidate[v] {
            continue;
        }
        forest.bottom.push(v);
        for x in view.across(v) {
            forest.top.push(x);
            forest.edges.push((x, v));
            for b in view.across(x) {
                candidate[b] = false;
            }
        }
    }
    forest.top.sort_unstable();
    forest.edges.sort_unstable();
    let required = eta * int(a) / pow(max_degree, 3);
    let bound = Bound::new("b(F) >= eta a / Delta^3", forest.bottom.len(), required);
    Ok(SelectionOutcome::Branching { forest, bound })
}

/// Independent set or induced matching inside the subgraph induced by `set`.
///
/// Repeatedly takes the lexicographically smallest remaining edge and
/// deletes both endpoints and all their neighbors (at most `2Δ` vertices per
/// step) until no edge is left. The survivors are independent; the chosen
/// edges form an induced matching. Survivors win when there are at least
/// `(1 - eta) n` of them, unless that set is empty while edges were chosen.
pub fn split_is_or_im(
    g: &Graph,
    set: &[Vertex],
    eta: Rational,
) -> Result<SelectionOutcome, LemmaError> {
    if eta > int(1) {
        return Err(LemmaError::EtaOutOfRange(eta));
    }
    g.check_set(set)?;
    let mut set = set.to_vec();
    set.sort_unstable();
    set.dedup();
    let n = set.len();
    let max_degree = g.max_degree_within(&set);

    let mut alive = g.membership(&set);
    let mut edges = Vec::new();
    for &u in &set {
        if !alive[u] {
            continue;
        }
        let Some(v) = g.neighbors(u).iter().copied().find(|&v| v > u && alive[v]) else {
            continue;
        };
        edges.push((u, v));
        for w in [u, v] {
            alive[w] = false;
            for &x in g.neighbors(w) {
                alive[x] = false;
            }
        }
    }
    let survivors: Vec<Vertex> = set.iter().copied().filter(|&v| alive[v]).collect();

    let required = (int(1) - eta) * int(n);
    if int(survivors.len()) >= required && (!survivors.is_empty() || edges.is_empty()) {
        let bound = Bound::new("independent set >= (1-eta)n", survivors.len(), required);
        return Ok(SelectionOutcome::IndependentSet {
            vertices: survivors,
            bound,
        });
    }
    let required = eta * int(n) / int(2 * max_degree);
    let bound = Bound::new("induced matching edges >= eta n / (2 Delta)", edges.len(), required);
    Ok(SelectionOutcome::InducedMatching { edges, bound })
}
