//! Immutable simple undirected graphs on dense vertex ids `0..n`.

use std::collections::VecDeque;

use thiserror::Error;

/// Vertices are dense integers `0..n`.
pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
}

/// A simple undirected graph with sorted adjacency lists.
///
/// Every set-valued output derived from a `Graph` is sorted ascending, so
/// any "arbitrary vertex" choice made downstream is the lowest index.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    edges: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            edges: 0,
        }
    }

    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) are merged; self-loops are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut edges = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            edges += list.len();
        }
        Ok(Graph {
            adj,
            edges: edges / 2,
        })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() {
            (u, v)
        } else {
            (v, u)
        };
        self.adj[a].binary_search(&b).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Maximum degree; 0 for an edgeless (or empty) graph.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    pub(crate) fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if v < self.n() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        }
    }

    pub(crate) fn check_set(&self, set: &[Vertex]) -> Result<(), GraphError> {
        set.iter().try_for_each(|&v| self.check_vertex(v))
    }

    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return true;
        }
        let seen = self.reach_from(0, |_| true);
        seen.iter().all(|&s| s)
    }

    /// Scans `N(u) ∩ N(v)` for every edge `uv`.
    pub fn is_triangle_free(&self) -> bool {
        self.edges()
            .all(|(u, v)| !sorted_intersect(&self.adj[u], &self.adj[v]))
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    /// A proper 2-coloring (`false`/`true` per vertex), each component
    /// colored from its lowest vertex, or `None` if an odd cycle exists.
    pub fn two_coloring(&self) -> Option<Vec<bool>> {
        let mut color: Vec<Option<bool>> = vec![None; self.n()];
        let mut queue = VecDeque::new();
        for s in self.vertices() {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].expect("queued vertices are colored");
                for &w in &self.adj[u] {
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(|c| c.unwrap_or(false)).collect())
    }

    /// Whether the subgraph induced by `set` is acyclic.
    pub fn is_forest(&self, set: &[Vertex]) -> bool {
        let members = self.membership(set);
        let k = members.iter().filter(|&&m| m).count();
        let induced_edges = self.count_induced_edges(&members);
        let components = self.count_components(&members);
        induced_edges + components == k
    }

    /// Whether `set` induces a tree (nonempty, connected, acyclic).
    pub fn is_induced_tree(&self, set: &[Vertex]) -> bool {
        let members = self.membership(set);
        let k = members.iter().filter(|&&m| m).count();
        k > 0 && self.count_induced_edges(&members) + 1 == k && self.count_components(&members) == 1
    }

    /// Whether `set` is an independent set.
    pub fn is_independent(&self, set: &[Vertex]) -> bool {
        let members = self.membership(set);
        set.iter()
            .all(|&v| self.adj[v].iter().all(|&w| !members[w]))
    }

    /// The subgraph induced by `set`, plus the map from new ids to old ids
    /// (new vertex `i` is the `i`-th smallest element of `set`).
    pub fn induced_subgraph(&self, set: &[Vertex]) -> (Graph, Vec<Vertex>) {
        let mut map: Vec<Vertex> = set.to_vec();
        map.sort_unstable();
        map.dedup();
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let mut adj = vec![Vec::new(); map.len()];
        let mut edges = 0;
        for (i, &v) in map.iter().enumerate() {
            // source lists are sorted and `index` is monotone on `map`
            adj[i] = self.adj[v]
                .iter()
                .filter_map(|&w| (index[w] != usize::MAX).then_some(index[w]))
                .collect();
            edges += adj[i].len();
        }
        (
            Graph {
                adj,
                edges: edges / 2,
            },
            map,
        )
    }

    /// Maximum degree of the subgraph induced by `set`.
    pub fn max_degree_within(&self, set: &[Vertex]) -> usize {
        let members = self.membership(set);
        set.iter()
            .map(|&v| self.adj[v].iter().filter(|&&w| members[w]).count())
            .max()
            .unwrap_or(0)
    }

    /// Vertices of the connected component of `start` inside the subgraph
    /// induced by `set`, sorted. `start` must belong to `set`.
    pub fn component_within(&self, set: &[Vertex], start: Vertex) -> Vec<Vertex> {
        let members = self.membership(set);
        let seen = self.reach_from(start, |w| members[w]);
        seen.iter()
            .enumerate()
            .filter_map(|(v, &s)| s.then_some(v))
            .collect()
    }

    pub(crate) fn membership(&self, set: &[Vertex]) -> Vec<bool> {
        let mut members = vec![false; self.n()];
        for &v in set {
            members[v] = true;
        }
        members
    }

    fn count_induced_edges(&self, members: &[bool]) -> usize {
        members
            .iter()
            .enumerate()
            .filter(|(_, &m)| m)
            .map(|(v, _)| self.adj[v].iter().filter(|&&w| w > v && members[w]).count())
            .sum()
    }

    fn count_components(&self, members: &[bool]) -> usize {
        let mut seen = vec![false; self.n()];
        let mut components = 0;
        let mut stack = Vec::new();
        for s in self.vertices() {
            if !members[s] || seen[s] {
                continue;
            }
            components += 1;
            seen[s] = true;
            stack.push(s);
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if members[w] && !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        components
    }

    fn reach_from(&self, start: Vertex, allowed: impl Fn(Vertex) -> bool) -> Vec<bool> {
        let mut seen = vec![false; self.n()];
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &w in &self.adj[u] {
                if !seen[w] && allowed(w) {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen
    }
}

fn sorted_intersect(a: &[Vertex], b: &[Vertex]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return true,
        }
    }
    false
}

/// Greedy independent subset of `set`: repeatedly take the lowest remaining
/// vertex and discard its neighbors. Each pick discards at most `Δ_S + 1`
/// vertices, so the result has at least `⌈|S| / (Δ_S + 1)⌉` elements.
pub fn greedy_independent_set(g: &Graph, set: &[Vertex]) -> Vec<Vertex> {
    let mut alive = g.membership(set);
    let mut ordered = set.to_vec();
    ordered.sort_unstable();
    ordered.dedup();
    let mut out = Vec::new();
    for v in ordered {
        if !alive[v] {
            continue;
        }
        out.push(v);
        alive[v] = false;
        for &w in g.neighbors(v) {
            alive[w] = false;
        }
    }
    out
}
