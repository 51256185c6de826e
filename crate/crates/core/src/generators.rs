//! Extremal constructions and seeded random instances.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("path of bicliques needs k >= 2, got {0}")]
    KTooSmall(usize),
    #[error("blow-up needs at least 3 attachment vertices, got {0}")]
    TooFewPorts(usize),
    #[error("attachment vertex {0} is out of range or repeated")]
    BadPort(Vertex),
    #[error("blow-up base graph must be connected")]
    BaseDisconnected,
    #[error("construction would have {vertices} vertices, over the cap of {cap}")]
    TooLarge { vertices: u128, cap: usize },
}

/// Small named families used throughout the tests and the CLI.
pub mod classic {
    use super::*;

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("valid path")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycles need at least 3 vertices");
        Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).expect("valid cycle")
    }

    pub fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
            .expect("valid clique")
    }

    /// `K_{a,b}` with sides `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
            .expect("valid biclique")
    }

    /// `K_{1,r}` centered at vertex 0.
    pub fn star(r: usize) -> Graph {
        complete_bipartite(1, r)
    }
}

/// A graph together with its natural level partition.
#[derive(Debug, Clone)]
pub struct Layered {
    pub graph: Graph,
    pub levels: Vec<Vec<Vertex>>,
}

/// Levels `V_{-(k-1)}, ..., V_{k-1}` with `|V_i| = k - |i|`, numbered
/// consecutively, and every edge between consecutive levels present.
/// `k^2` vertices; every induced tree has at most `2k - 1` of them.
pub fn path_of_bicliques(k: usize) -> Result<Layered, GenError> {
    if k < 2 {
        return Err(GenError::KTooSmall(k));
    }
    let mut levels = Vec::with_capacity(2 * k - 1);
    let mut next = 0;
    for i in -(k as isize - 1)..=(k as isize - 1) {
        let size = k - i.unsigned_abs();
        levels.push((next..next + size).collect::<Vec<_>>());
        next += size;
    }
    let edges = levels.windows(2).flat_map(|pair| {
        let (lower, upper) = (&pair[0], &pair[1]);
        lower
            .iter()
            .flat_map(move |&u| upper.iter().map(move |&v| (u, v)))
    });
    let graph = Graph::from_edges(next, edges).expect("valid construction");
    Ok(Layered { graph, levels })
}

/// The subgraph of `path_of_bicliques(k)` on its first `n` vertices, where
/// `(k-1)^2 < n <= k^2`. Dropping a suffix of the level order keeps every
/// remaining vertex attached to the level before it, so the result stays
/// connected. `t` of the result is at most `2k - 1 < 2 sqrt(n) + 1`.
pub fn truncated_path_of_bicliques(n: usize) -> Layered {
    if n <= 1 {
        return Layered {
            graph: Graph::empty(n),
            levels: if n == 1 { vec![vec![0]] } else { vec![] },
        };
    }
    let k = (2..).find(|k| k * k >= n).expect("unbounded search");
    let full = path_of_bicliques(k).expect("k >= 2");
    let keep: Vec<Vertex> = (0..n).collect();
    let (graph, _) = full.graph.induced_subgraph(&keep);
    let levels = full
        .levels
        .into_iter()
        .map(|l| l.into_iter().filter(|&v| v < n).collect::<Vec<_>>())
        .filter(|l| !l.is_empty())
        .collect();
    Layered { graph, levels }
}

/// Parameters of the tree-of-copies blow-up.
#[derive(Debug, Clone)]
pub struct BlowUpSpec {
    pub base: Graph,
    /// Ordered attachment vertices `w_0, ..., w_{m-1}`; `w_0` is the port
    /// towards the parent copy, `w_i` (`i >= 1`) the port towards child `i`.
    pub ports: Vec<Vertex>,
    pub depth: usize,
}

impl BlowUpSpec {
    pub fn arity(&self) -> usize {
        self.ports.len().saturating_sub(1)
    }
}

/// Where each vertex of a blow-up came from. Tree nodes are numbered in BFS
/// order (children of node `p` are `p*r + 1 ..= p*r + r`) and each copy
/// occupies a contiguous block of `base_n` vertex ids.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlowUpLayout {
    pub base_n: usize,
    pub arity: usize,
    pub depth: usize,
    pub nodes: usize,
}

impl BlowUpLayout {
    pub fn vertex(&self, node: usize, base_vertex: Vertex) -> Vertex {
        node * self.base_n + base_vertex
    }

    /// `(tree node, base vertex)` of a blow-up vertex.
    pub fn locate(&self, v: Vertex) -> (usize, Vertex) {
        (v / self.base_n, v % self.base_n)
    }

    pub fn parent(&self, node: usize) -> Option<usize> {
        (node > 0).then(|| (node - 1) / self.arity)
    }

    /// Node ids of the children of `node`; empty for leaves.
    pub fn children(&self, node: usize) -> std::ops::Range<usize> {
        let first = node * self.arity + 1;
        if first >= self.nodes {
            first..first
        } else {
            first..first + self.arity
        }
    }
}

#[derive(Debug, Clone)]
pub struct BlowUp {
    pub graph: Graph,
    pub layout: BlowUpLayout,
}

/// Number of nodes of the complete `r`-ary tree with `l` levels below the
/// root: `(r^{l+1} - 1) / (r - 1)`.
pub fn tree_node_count(arity: usize, depth: usize) -> u128 {
    let r = arity as u128;
    (0..=depth as u32).map(|i| r.saturating_pow(i)).fold(0u128, u128::saturating_add)
}

/// Glues copies of `spec.base` along a complete `r`-ary tree of depth
/// `spec.depth` (`r = m - 1`): for a non-leaf node `v` and its `i`-th child
/// `u`, joins `w_i` in the copy of `v` to `w_0` in the copy of `u`.
pub fn blow_up(spec: &BlowUpSpec, max_vertices: usize) -> Result<BlowUp, GenError> {
    let m = spec.ports.len();
    if m < 3 {
        return Err(GenError::TooFewPorts(m));
    }
    let base_n = spec.base.n();
    let mut seen = vec![false; base_n];
    for &w in &spec.ports {
        if w >= base_n || seen[w] {
            return Err(GenError::BadPort(w));
        }
        seen[w] = true;
    }
    if !spec.base.is_connected() {
        return Err(GenError::BaseDisconnected);
    }

    let arity = m - 1;
    let nodes = tree_node_count(arity, spec.depth);
    let vertices = nodes.saturating_mul(base_n as u128);
    if vertices > max_vertices as u128 {
        return Err(GenError::TooLarge {
            vertices,
            cap: max_vertices,
        });
    }
    let layout = BlowUpLayout {
        base_n,
        arity,
        depth: spec.depth,
        nodes: nodes as usize,
    };

    let base_edges: Vec<_> = spec.base.edges().collect();
    let mut edges = Vec::with_capacity(layout.nodes * (base_edges.len() + 1));
    for node in 0..layout.nodes {
        edges.extend(
            base_edges
                .iter()
                .map(|&(a, b)| (layout.vertex(node, a), layout.vertex(node, b))),
        );
        for (i, child) in layout.children(node).enumerate() {
            edges.push((
                layout.vertex(node, spec.ports[i + 1]),
                layout.vertex(child, spec.ports[0]),
            ));
        }
    }
    let graph = Graph::from_edges(layout.nodes * base_n, edges).expect("valid blow-up");
    Ok(BlowUp { graph, layout })
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniformly shuffled attachment order: vertex `order[i]` hangs off a
/// uniformly chosen earlier vertex.
fn random_tree_edges(n: usize, rng: &mut ChaCha8Rng) -> Vec<(Vertex, Vertex)> {
    let mut order: Vec<Vertex> = (0..n).collect();
    order.shuffle(rng);
    (1..n)
        .map(|i| (order[rng.random_range(0..i)], order[i]))
        .collect()
}

fn random_pair(n: usize, rng: &mut ChaCha8Rng) -> Option<(Vertex, Vertex)> {
    let u = rng.random_range(0..n);
    let v = rng.random_range(0..n);
    (u != v).then_some((u.min(v), u.max(v)))
}

/// A random spanning tree plus `edge_budget` sampled extra edges, each
/// skipped if it already exists or would close a triangle.
pub fn random_connected_triangle_free(n: usize, edge_budget: usize, seed: u64) -> Graph {
    assert!(n >= 1, "need at least one vertex");
    let mut rng = rng(seed);
    let mut adj: Vec<BTreeSet<Vertex>> = vec![BTreeSet::new(); n];
    for (u, v) in random_tree_edges(n, &mut rng) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    for _ in 0..edge_budget {
        let Some((u, v)) = random_pair(n, &mut rng) else {
            continue;
        };
        if adj[u].contains(&v) || adj[u].intersection(&adj[v]).next().is_some() {
            continue;
        }
        adj[u].insert(v);
        adj[v].insert(u);
    }
    from_sets(&adj)
}

/// A random spanning tree plus `edge_budget` sampled extra edges, each
/// skipped unless it joins the two color classes of the tree.
pub fn random_connected_bipartite(n: usize, edge_budget: usize, seed: u64) -> Graph {
    assert!(n >= 1, "need at least one vertex");
    let mut rng = rng(seed);
    let tree = Graph::from_edges(n, random_tree_edges(n, &mut rng)).expect("valid tree");
    let color = tree.two_coloring().expect("trees are bipartite");
    let mut edges: Vec<_> = tree.edges().collect();
    for _ in 0..edge_budget {
        if let Some((u, v)) = random_pair(n, &mut rng) {
            if color[u] != color[v] {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("valid graph")
}

/// Every pair independently present with probability `p`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = rng(seed);
    let mut edges = Vec::new();
    for v in 1..n {
        for u in 0..v {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("valid graph")
}

fn from_sets(adj: &[BTreeSet<Vertex>]) -> Graph {
    let edges = adj
        .iter()
        .enumerate()
        .flat_map(|(u, set)| set.range(u + 1..).map(move |&v| (u, v)));
    Graph::from_edges(adj.len(), edges).expect("valid graph")
}
