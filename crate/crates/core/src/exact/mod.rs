//! Exact oracles. Everything here is exponential and meant for desk-scale
//! inputs; the extractors never call into this module.

mod alpha;
mod fsearch;
mod tree;
mod up_growing;

pub use alpha::{independence_number, ALPHA_MAX_N};
pub use fsearch::{
    f_search_native, f_search_stream, FSearchOptions, FSearchResult, GraphClass, OnStreamError,
    Source, StreamIssue, NATIVE_MAX_N,
};
pub use tree::{induced_tree_at_least, max_induced_tree, max_induced_tree_naive, NAIVE_MAX_N};
pub use up_growing::{is_up_growing, max_up_growing_top_count, UP_GROWING_MAX_N};

use serde::Serialize;
use thiserror::Error;

use crate::graph::Vertex;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("graph has {n} vertices, over the cap of {cap} for this solver")]
    TooLarge { n: usize, cap: usize },
    #[error("level decomposition names vertex {0}, which is not in the graph")]
    LevelsMismatch(Vertex),
    #[error("stream line {line}: {message}")]
    Stream { line: usize, message: String },
    #[error("could not start worker pool: {0}")]
    Pool(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExactResult {
    pub value: usize,
    pub witness: Vec<Vertex>,
    pub nodes_explored: u64,
    /// `true` when the search finished, so `value` is proven optimal.
    pub exhausted: bool,
}
