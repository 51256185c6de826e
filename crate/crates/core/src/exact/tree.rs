use fixedbitset::FixedBitSet;

use super::{ExactError, ExactResult};
use crate::graph::{Graph, Vertex};

pub const NAIVE_MAX_N: usize = 20;

/// Receives every induced tree produced by [`TreeSearch`].
pub(crate) trait TreeVisitor {
    fn visit(&mut self, tree: &[Vertex]);

    /// Branches that cannot produce a tree larger than this are skipped.
    fn cutoff(&self) -> Option<usize> {
        None
    }

    fn done(&self) -> bool {
        false
    }
}

/// Enumerates the induced trees of a graph by connected expansion.
///
/// Every tree is generated exactly once, from its minimum vertex (the
/// anchor). A search node holds the current tree `P`, its closed
/// neighborhood `N[P]`, and the extension set `X` of vertices above the
/// anchor with exactly one neighbor in `P`. Branching on `u ∈ X` removes `u`
/// from `X` for all later siblings, so sibling subtrees are disjoint; adding
/// `u` drops from `X` the vertices adjacent to `u` (they would close a cycle)
/// and adds the neighbors of `u` outside `N[P]`.
pub(crate) struct TreeSearch<'g> {
    g: &'g Graph,
    neighbors: Vec<FixedBitSet>,
    anchor: Vertex,
    budget: u64,
    pub nodes: u64,
    pub aborted: bool,
}

impl<'g> TreeSearch<'g> {
    pub fn new(g: &'g Graph, budget: u64) -> Self {
        let n = g.n();
        let neighbors = g
            .vertices()
            .map(|v| {
                let mut set = FixedBitSet::with_capacity(n);
                set.extend(g.neighbors(v).iter().copied());
                set
            })
            .collect();
        TreeSearch {
            g,
            neighbors,
            anchor: 0,
            budget,
            nodes: 0,
            aborted: false,
        }
    }

    pub fn run<V: TreeVisitor>(&mut self, visitor: &mut V) {
        let n = self.g.n();
        for anchor in 0..n {
            if visitor.done() || visitor.cutoff().is_some_and(|c| c >= n - anchor) {
                break;
            }
            self.anchor = anchor;
            let mut closed = self.neighbors[anchor].clone();
            closed.insert(anchor);
            let ext = self.above_anchor(&self.neighbors[anchor]);
            let mut tree = vec![anchor];
            self.expand(&mut tree, &closed, ext, visitor);
            if self.aborted {
                break;
            }
        }
    }

    fn above_anchor(&self, set: &FixedBitSet) -> FixedBitSet {
        let mut out = set.clone();
        out.remove_range(..self.anchor + 1);
        out
    }

    fn expand<V: TreeVisitor>(
        &mut self,
        tree: &mut Vec<Vertex>,
        closed: &FixedBitSet,
        mut ext: FixedBitSet,
        visitor: &mut V,
    ) {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.aborted = true;
            return;
        }
        visitor.visit(tree);
        if visitor.done() {
            return;
        }
        while let Some(u) = ext.minimum() {
            if let Some(cutoff) = visitor.cutoff() {
                if tree.len() + self.reachable(closed, &ext) <= cutoff {
                    return;
                }
            }
            ext.set(u, false);

            let mut next = ext.clone();
            next.difference_with(&self.neighbors[u]);
            let mut fresh = self.above_anchor(&self.neighbors[u]);
            fresh.difference_with(closed);
            next.union_with(&fresh);

            let mut next_closed = closed.clone();
            next_closed.union_with(&self.neighbors[u]);

            tree.push(u);
            self.expand(tree, &next_closed, next, visitor);
            tree.pop();
            if self.aborted || visitor.done() {
                return;
            }
        }
    }

    /// Vertices that any extension of the current tree could still use:
    /// everything reachable from `ext` through vertices above the anchor
    /// that are outside `N[P]`.
    fn reachable(&self, closed: &FixedBitSet, ext: &FixedBitSet) -> usize {
        let mut seen = ext.clone();
        let mut stack: Vec<Vertex> = ext.ones().collect();
        while let Some(v) = stack.pop() {
            for &w in self.g.neighbors(v) {
                if w > self.anchor && !closed.contains(w) && !seen.contains(w) {
                    seen.insert(w);
                    stack.push(w);
                }
            }
        }
        seen.count_ones(..)
    }
}

struct Largest {
    best: Vec<Vertex>,
    stop_at: Option<usize>,
}

impl TreeVisitor for Largest {
    fn visit(&mut self, tree: &[Vertex]) {
        if tree.len() > self.best.len() {
            self.best = tree.to_vec();
        }
    }

    fn cutoff(&self) -> Option<usize> {
        Some(self.best.len())
    }

    fn done(&self) -> bool {
        self.stop_at.is_some_and(|s| self.best.len() >= s)
    }
}

/// Exact `t(G)` by branch and bound over induced trees, exploring at most
/// `budget` search nodes. When the budget runs out the best tree found so
/// far is returned with `exhausted = false`.
pub fn max_induced_tree(g: &Graph, budget: u64) -> ExactResult {
    search_largest(g, budget, None)
}

/// Like [`max_induced_tree`] but stops as soon as a tree with at least
/// `target` vertices is found. The result is exact only when its value is
/// below `target`.
pub fn induced_tree_at_least(g: &Graph, target: usize, budget: u64) -> ExactResult {
    search_largest(g, budget, Some(target))
}

fn search_largest(g: &Graph, budget: u64, stop_at: Option<usize>) -> ExactResult {
    let mut search = TreeSearch::new(g, budget);
    let mut visitor = Largest {
        best: Vec::new(),
        stop_at,
    };
    search.run(&mut visitor);
    let mut witness = visitor.best;
    witness.sort_unstable();
    ExactResult {
        value: witness.len(),
        witness,
        nodes_explored: search.nodes,
        exhausted: !search.aborted,
    }
}

/// Exact `t(G)` by testing all `2^n` vertex subsets; `n <= 20`.
pub fn max_induced_tree_naive(g: &Graph) -> Result<ExactResult, ExactError> {
    let n = g.n();
    if n > NAIVE_MAX_N {
        return Err(ExactError::TooLarge {
            n,
            cap: NAIVE_MAX_N,
        });
    }
    let adj: Vec<u32> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect();
    let mut best = 0u32;
    let mut best_size = 0;
    for mask in 1u32..(1u32 << n) {
        let size = mask.count_ones() as usize;
        if size > best_size && is_tree_mask(&adj, mask) {
            best = mask;
            best_size = size;
        }
    }
    let witness = (0..n).filter(|&v| best >> v & 1 == 1).collect();
    Ok(ExactResult {
        value: best_size,
        witness,
        nodes_explored: (1u64 << n).saturating_sub(1),
        exhausted: true,
    })
}

fn is_tree_mask(adj: &[u32], mask: u32) -> bool {
    let mut degree_sum = 0;
    let mut rest = mask;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        degree_sum += (adj[v] & mask).count_ones();
    }
    if degree_sum / 2 + 1 != mask.count_ones() {
        return false;
    }
    let mut reached = mask & mask.wrapping_neg();
    loop {
        let mut grown = reached;
        let mut rest = reached;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            grown |= adj[v] & mask;
        }
        if grown == reached {
            return reached == mask;
        }
        reached = grown;
    }
}
