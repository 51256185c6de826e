//! Large induced trees in connected triangle-free and bipartite graphs.
//!
//! - [`graph`], [`levels`], [`view`], [`io`]: graph representation, BFS
//!   levels, bipartite views, graph6 and edge-list formats.
//! - [`generators`]: the path of bicliques, the tree-of-copies blow-up, and
//!   seeded random instances.
//! - [`lemmas`]: the matching / up-forest and independent set / induced
//!   matching dichotomies.
//! - [`extract`]: level-descent extraction with a checkable trace.
//! - [`certify`]: independent re-checking of everything the above produce.
//! - [`exact`]: brute-force and branch-and-bound oracles.

pub mod bound;
pub mod certify;
pub mod exact;
pub mod extract;
pub mod generators;
pub mod graph;
pub mod io;
pub mod lemmas;
pub mod levels;
pub mod view;

pub use graph::{greedy_independent_set, Graph, GraphError, Vertex};
