//! Breadth-first level decomposition around a root vertex.

use std::collections::VecDeque;

use serde::Serialize;

use crate::graph::{Graph, GraphError, Vertex};

/// Partition of the vertices reachable from `root` by their distance to it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LevelDecomposition {
    root: Vertex,
    levels: Vec<Vec<Vertex>>,
    #[serde(skip)]
    level_of: Vec<Option<usize>>,
    unreachable: Vec<Vertex>,
}

impl LevelDecomposition {
    /// Builds a decomposition from explicit level sets, e.g. the natural
    /// levels of a generated construction. Sets must be disjoint and in range.
    pub fn from_levels(n: usize, levels: Vec<Vec<Vertex>>) -> Result<Self, GraphError> {
        let mut level_of = vec![None; n];
        let mut levels = levels;
        for (i, level) in levels.iter_mut().enumerate() {
            level.sort_unstable();
            for &v in level.iter() {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: v, n });
                }
                level_of[v] = Some(i);
            }
        }
        let unreachable = (0..n).filter(|&v| level_of[v].is_none()).collect();
        let root = levels.first().and_then(|l| l.first().copied()).unwrap_or(0);
        Ok(LevelDecomposition {
            root,
            levels,
            level_of,
            unreachable,
        })
    }

    pub fn root(&self) -> Vertex {
        self.root
    }

    pub fn levels(&self) -> &[Vec<Vertex>] {
        &self.levels
    }

    pub fn level(&self, i: usize) -> &[Vertex] {
        self.levels.get(i).map_or(&[], Vec::as_slice)
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    pub fn level_of(&self, v: Vertex) -> Option<usize> {
        self.level_of.get(v).copied().flatten()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }

    pub fn unreachable(&self) -> &[Vertex] {
        &self.unreachable
    }

    /// The lowest-index neighbor of `v` one level closer to the root.
    pub fn parent(&self, g: &Graph, v: Vertex) -> Option<Vertex> {
        let lv = self.level_of(v)?;
        if lv == 0 {
            return None;
        }
        g.neighbors(v)
            .iter()
            .copied()
            .find(|&w| self.level_of(w) == Some(lv - 1))
    }
}

/// Levels `L_i` = vertices at distance exactly `i` from `root`.
pub fn bfs_levels(g: &Graph, root: Vertex) -> Result<LevelDecomposition, GraphError> {
    g.check_vertex(root)?;
    let mut level_of = vec![None; g.n()];
    let mut levels: Vec<Vec<Vertex>> = vec![vec![root]];
    level_of[root] = Some(0);
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        let next = level_of[u].expect("queued vertices have a level") + 1;
        for &w in g.neighbors(u) {
            if level_of[w].is_none() {
                level_of[w] = Some(next);
                if levels.len() == next {
                    levels.push(Vec::new());
                }
                levels[next].push(w);
                queue.push_back(w);
            }
        }
    }
    for level in &mut levels {
        level.sort_unstable();
    }
    let unreachable = g.vertices().filter(|&v| level_of[v].is_none()).collect();
    Ok(LevelDecomposition {
        root,
        levels,
        level_of,
        unreachable,
    })
}
