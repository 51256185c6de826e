use thiserror::Error;

use crate::graph::{Graph, GraphError, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ViewError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("vertex {0} is on both sides of the view")]
    Overlap(Vertex),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Side {
    Outside,
    Top,
    Bottom,
}

/// A graph together with a designated top class `A` and bottom class `B`.
///
/// Only edges joining `A` to `B` exist as far as the view is concerned;
/// edges inside either class are ignored.
#[derive(Debug, Clone)]
pub struct BipartiteView<'g> {
    base: &'g Graph,
    top: Vec<Vertex>,
    bottom: Vec<Vertex>,
    side: Vec<Side>,
}

impl<'g> BipartiteView<'g> {
    pub fn new(base: &'g Graph, top: &[Vertex], bottom: &[Vertex]) -> Result<Self, ViewError> {
        base.check_set(top)?;
        base.check_set(bottom)?;
        let mut side = vec![Side::Outside; base.n()];
        let mut top = top.to_vec();
        top.sort_unstable();
        top.dedup();
        let mut bottom = bottom.to_vec();
        bottom.sort_unstable();
        bottom.dedup();
        for &a in &top {
            side[a] = Side::Top;
        }
        for &b in &bottom {
            if side[b] == Side::Top {
                return Err(ViewError::Overlap(b));
            }
            side[b] = Side::Bottom;
        }
        Ok(BipartiteView {
            base,
            top,
            bottom,
            side,
        })
    }

    pub fn base(&self) -> &'g Graph {
        self.base
    }

    pub fn top(&self) -> &[Vertex] {
        &self.top
    }

    pub fn bottom(&self) -> &[Vertex] {
        &self.bottom
    }

    pub fn is_top(&self, v: Vertex) -> bool {
        self.side.get(v) == Some(&Side::Top)
    }

    pub fn is_bottom(&self, v: Vertex) -> bool {
        self.side.get(v) == Some(&Side::Bottom)
    }

    /// Neighbors of `v` across the view: bottom neighbors of a top vertex or
    /// top neighbors of a bottom vertex. Empty for vertices outside the view.
    pub fn across(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        let want = match self.side[v] {
            Side::Top => Side::Bottom,
            Side::Bottom => Side::Top,
            Side::Outside => Side::Outside,
        };
        self.base
            .neighbors(v)
            .iter()
            .copied()
            .filter(move |&w| want != Side::Outside && self.side[w] == want)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.across(v).count()
    }

    /// Maximum degree over the `A`–`B` edges only.
    pub fn max_degree(&self) -> usize {
        self.top
            .iter()
            .chain(&self.bottom)
            .map(|&v| self.degree(v))
            .max()
            .unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.top.iter().map(|&a| self.degree(a)).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::classic;

    #[test]
    fn ignores_edges_inside_a_class() {
        // triangle 0-1-2 with 0,1 on top: edge 01 is invisible
        let g = classic::complete(3);
        let view = BipartiteView::new(&g, &[0, 1], &[2]).unwrap();
        assert_eq!(view.across(0).collect::<Vec<_>>(), vec![2]);
        assert_eq!(view.degree(2), 2);
        assert_eq!(view.max_degree(), 2);
        assert_eq!(view.edge_count(), 2);
    }

    #[test]
    fn rejects_overlap() {
        let g = classic::path(3);
        assert_eq!(
            BipartiteView::new(&g, &[0, 1], &[1]).unwrap_err(),
            ViewError::Overlap(1)
        );
        assert!(BipartiteView::new(&g, &[5], &[]).is_err());
    }
}
