use super::tree::{TreeSearch, TreeVisitor};
use super::{ExactError, ExactResult};
use crate::graph::{Graph, Vertex};
use crate::levels::LevelDecomposition;

pub const UP_GROWING_MAX_N: usize = 64;

/// Whether `tree` grows upward through `levels`: every vertex above the
/// lowest occupied level has exactly one tree neighbor one level down and no
/// tree neighbor in its own level. Vertices outside the decomposition fail.
pub fn is_up_growing(g: &Graph, levels: &LevelDecomposition, tree: &[Vertex]) -> bool {
    let Some(lows) = tree.iter().map(|&v| levels.level_of(v)).collect::<Option<Vec<_>>>() else {
        return false;
    };
    let Some(&lowest) = lows.iter().min() else {
        return true;
    };
    let mut member = vec![false; g.n()];
    for &v in tree {
        member[v] = true;
    }
    tree.iter().zip(&lows).all(|(&v, &lv)| {
        if lv == lowest {
            return true;
        }
        let mut below = 0;
        for &w in g.neighbors(v) {
            if !member[w] {
                continue;
            }
            match levels.level_of(w) {
                Some(lw) if lw == lv => return false,
                Some(lw) if lw + 1 == lv => below += 1,
                _ => {}
            }
        }
        below == 1
    })
}

struct TopCount<'a> {
    g: &'a Graph,
    levels: &'a LevelDecomposition,
    is_top: Vec<bool>,
    best: Vec<Vertex>,
    best_count: usize,
}

impl TreeVisitor for TopCount<'_> {
    fn visit(&mut self, tree: &[Vertex]) {
        let count = tree.iter().filter(|&&v| self.is_top[v]).count();
        if count > self.best_count && is_up_growing(self.g, self.levels, tree) {
            self.best_count = count;
            self.best = tree.to_vec();
        }
    }
}

/// The largest number of topmost-level vertices in an up-growing induced
/// tree, by exhaustive enumeration of induced trees. The witness is the
/// first tree attaining it.
pub fn max_up_growing_top_count(
    g: &Graph,
    levels: &LevelDecomposition,
    budget: u64,
) -> Result<ExactResult, ExactError> {
    let n = g.n();
    if n > UP_GROWING_MAX_N {
        return Err(ExactError::TooLarge {
            n,
            cap: UP_GROWING_MAX_N,
        });
    }
    let mut is_top = vec![false; n];
    if let Some(top) = levels.levels().last() {
        for &v in top {
            if v >= n {
                return Err(ExactError::LevelsMismatch(v));
            }
            is_top[v] = true;
        }
    }
    let mut visitor = TopCount {
        g,
        levels,
        is_top,
        best: Vec::new(),
        best_count: 0,
    };
    let mut search = TreeSearch::new(g, budget);
    search.run(&mut visitor);
    let mut witness = visitor.best;
    witness.sort_unstable();
    Ok(ExactResult {
        value: visitor.best_count,
        witness,
        nodes_explored: search.nodes,
        exhausted: !search.aborted,
    })
}
