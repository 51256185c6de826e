#![allow(dead_code)]

use itree::generators::random_graph;
use itree::io::{read_graphs, Format};
use itree::{Graph, Vertex};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const ATLAS: &str = include_str!("../data/atlas_n7.g6");

/// Every graph on at most 7 vertices, one per isomorphism class.
pub fn atlas() -> Vec<Graph> {
    read_graphs(ATLAS, Some(Format::Graph6)).expect("atlas parses")
}

/// `count` seeded random graphs with `1 <= n <= max_n` and edge density
/// drawn from `[0.1, 0.7]`.
pub fn random_corpus(count: usize, max_n: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.random_range(1..=max_n);
            let p = rng.random_range(0.1..0.7);
            random_graph(n, p, rng.random())
        })
        .collect()
}

pub fn proptest_config(cases: u32) -> Config {
    Config {
        cases,
        rng_seed: RngSeed::Fixed(0x001d_7ee5),
        failure_persistence: None,
        ..Config::default()
    }
}

/// Graph from a bit per vertex pair, pairs in column order
/// `(0,1), (0,2), (1,2), (0,3), ...`.
pub fn from_pair_bits(n: usize, bits: &[bool]) -> Graph {
    let pairs = (1..n).flat_map(|j| (0..j).map(move |i| (i, j)));
    Graph::from_edges(n, pairs.zip(bits).filter(|(_, &b)| b).map(|(p, _)| p)).unwrap()
}

pub fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2)
            .prop_map(move |bits| from_pair_bits(n, &bits))
    })
}

/// Tree test by union-find over the induced edges, written separately from
/// the library predicate.
pub fn naive_is_induced_tree(g: &Graph, set: &[Vertex]) -> bool {
    if set.is_empty() {
        return false;
    }
    let mut parent: Vec<usize> = (0..g.n()).collect();
    fn find(parent: &mut [usize], mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    let mut edges = 0;
    for (i, &u) in set.iter().enumerate() {
        for &v in &set[i + 1..] {
            if u == v {
                return false;
            }
            if g.has_edge(u, v) {
                edges += 1;
                let (a, b) = (find(&mut parent, u), find(&mut parent, v));
                if a == b {
                    return false;
                }
                parent[a] = b;
            }
        }
    }
    edges + 1 == set.len()
}

/// Largest subset of size <= 14 passing `keep`, by listing all subsets.
pub fn best_subset(g: &Graph, keep: impl Fn(&[Vertex]) -> bool) -> usize {
    assert!(g.n() <= 14);
    (0u32..1 << g.n())
        .filter_map(|mask| {
            let set: Vec<Vertex> = (0..g.n()).filter(|&v| mask >> v & 1 == 1).collect();
            keep(&set).then_some(set.len())
        })
        .max()
        .unwrap_or(0)
}

/// Target size large enough to skip both early exits of the extractors, so
/// that the level construction runs.
pub fn construction_t(g: &Graph, root: Vertex) -> usize {
    let depth = itree::levels::bfs_levels(g, root).unwrap().len();
    (g.max_degree() + 2).max(depth).max(3)
}

pub struct ViewCase {
    pub graph: Graph,
    pub top: Vec<Vertex>,
    pub bottom: Vec<Vertex>,
    pub eta: itree::bound::Rational,
}

/// A random bipartite view with `1 <= |A| <= max_top`: cross edges with a
/// random density, a few edges inside the classes (which the view must
/// ignore), and one extra cross edge for every top vertex left isolated.
pub fn random_view(max_top: usize, rng: &mut ChaCha8Rng) -> ViewCase {
    let a = rng.random_range(1..=max_top);
    let b = rng.random_range(1..=max_top);
    let p = rng.random_range(0.01..0.4);
    let mut edges = Vec::new();
    for u in 0..a {
        for w in a..a + b {
            if rng.random_bool(p) {
                edges.push((u, w));
            }
        }
        if !edges.iter().any(|&(x, _)| x == u) {
            edges.push((u, rng.random_range(a..a + b)));
        }
    }
    for _ in 0..rng.random_range(0..4) {
        let u = rng.random_range(0..a + b);
        let v = rng.random_range(0..a + b);
        if u != v && (u < a) == (v < a) {
            edges.push((u, v));
        }
    }
    let den = rng.random_range(2..=20u128);
    ViewCase {
        graph: Graph::from_edges(a + b, edges).unwrap(),
        top: (0..a).collect(),
        bottom: (a..a + b).collect(),
        eta: itree::bound::Rational::new(rng.random_range(1..den), den),
    }
}

/// A random graph on `1..=max_n` vertices, a random subset of it, and
/// `eta` in `(0, 1]`.
pub fn random_split_case(
    max_n: usize,
    rng: &mut ChaCha8Rng,
) -> (Graph, Vec<Vertex>, itree::bound::Rational) {
    let n = rng.random_range(1..=max_n);
    let g = random_graph(n, rng.random_range(0.0..0.3), rng.random());
    let keep = rng.random_range(0.3..=1.0);
    let set = g.vertices().filter(|_| rng.random_bool(keep)).collect();
    let den = rng.random_range(1..=20u128);
    (g, set, itree::bound::Rational::new(rng.random_range(1..=den), den))
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
