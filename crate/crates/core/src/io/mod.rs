mod edge_list;
mod graph6;

pub use edge_list::{parse_edge_list, write_edge_list, EdgeListError};
pub use graph6::{parse_graph6, parse_graph6_lines, write_graph6, Graph6Error, MAX_ORDER};

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Graph6,
    EdgeList,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReadError {
    #[error("no input")]
    Empty,
    #[error("graph6 line {line}: {error}")]
    Graph6 { line: usize, error: Graph6Error },
    #[error(transparent)]
    EdgeList(#[from] EdgeListError),
}

/// Guesses the format from the first non-blank byte: edge lists start with
/// a decimal digit, which graph6 never does.
pub fn detect_format(text: &str) -> Option<Format> {
    let first = text.bytes().find(|b| !b.is_ascii_whitespace())?;
    Some(if first.is_ascii_digit() {
        Format::EdgeList
    } else {
        Format::Graph6
    })
}

/// Reads every graph in `text`: a graph6 stream yields one graph per line,
/// an edge list exactly one graph.
pub fn read_graphs(text: &str, format: Option<Format>) -> Result<Vec<Graph>, ReadError> {
    match format.or_else(|| detect_format(text)).ok_or(ReadError::Empty)? {
        Format::EdgeList => Ok(vec![parse_edge_list(text)?]),
        Format::Graph6 => parse_graph6_lines(text)
            .map(|(line, r)| r.map_err(|error| ReadError::Graph6 { line, error }))
            .collect(),
    }
}
