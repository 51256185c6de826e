//! Plain edge-list text: a first line `n m`, then `m` lines `u v` with
//! 0-indexed, whitespace-separated endpoints.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdgeListError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("header announces {expected} edges but {found} edge lines follow")]
    EdgeCount { expected: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize), EdgeListError> {
    let syntax = |message: String| EdgeListError::Syntax { line, message };
    let mut fields = text.split_whitespace();
    let mut next = |what: &str| -> Result<usize, EdgeListError> {
        let field = fields
            .next()
            .ok_or_else(|| syntax(format!("missing {what}")))?;
        field
            .parse()
            .map_err(|_| syntax(format!("{what} {field:?} is not a non-negative integer")))
    };
    let pair = (next("first field")?, next("second field")?);
    if let Some(extra) = fields.next() {
        return Err(syntax(format!("unexpected field {extra:?}")));
    }
    Ok(pair)
}

pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (line, header) = lines.next().ok_or(EdgeListError::Syntax {
        line: 1,
        message: "missing \"n m\" header".into(),
    })?;
    let (n, m) = parse_pair(line, header)?;
    let edges = lines
        .map(|(line, l)| parse_pair(line, l))
        .collect::<Result<Vec<_>, _>>()?;
    if edges.len() != m {
        return Err(EdgeListError::EdgeCount {
            expected: m,
            found: edges.len(),
        });
    }
    Ok(Graph::from_edges(n, edges)?)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").expect("writing to a String");
    }
    out
}
