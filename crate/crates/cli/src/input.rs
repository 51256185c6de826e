use std::fs;
use std::io::Read;
use std::path::Path;

use anyhow::{bail, Context, Result};
use clap::ValueEnum;
use itree::io::{detect_format, read_graphs, Format};
use itree::Graph;
use serde::Serialize;
use sha2::{Digest, Sha256};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Graph6,
    EdgeList,
}

impl From<InputFormat> for Format {
    fn from(f: InputFormat) -> Self {
        match f {
            InputFormat::Graph6 => Format::Graph6,
            InputFormat::EdgeList => Format::EdgeList,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct InputInfo {
    pub digest: String,
    pub bytes: usize,
    pub format: &'static str,
    pub graphs: usize,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    let digest = Sha256::digest(bytes);
    let hex: String = digest.iter().map(|b| format!("{b:02x}")).collect();
    format!("sha256:{hex}")
}

/// Reads `path` or, when absent or `-`, standard input.
pub fn read_text(path: Option<&Path>) -> Result<String> {
    match path {
        Some(p) if p != Path::new("-") => {
            fs::read_to_string(p).with_context(|| format!("cannot read {}", p.display()))
        }
        _ => {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .context("cannot read standard input")?;
            Ok(text)
        }
    }
}

pub fn describe(text: &str, graphs: usize, format: Format) -> InputInfo {
    InputInfo {
        digest: sha256_hex(text.as_bytes()),
        bytes: text.len(),
        format: match format {
            Format::Graph6 => "graph6",
            Format::EdgeList => "edge-list",
        },
        graphs,
    }
}

/// Reads every graph of the input, detecting the format unless `forced`.
pub fn load_graphs(path: Option<&Path>, forced: Option<InputFormat>) -> Result<(Vec<Graph>, InputInfo)> {
    let text = read_text(path)?;
    let format = match forced {
        Some(f) => f.into(),
        None => match detect_format(&text) {
            Some(f) => f,
            None => bail!("input is empty"),
        },
    };
    let graphs = read_graphs(&text, Some(format))?;
    let info = describe(&text, graphs.len(), format);
    Ok((graphs, info))
}

/// Like [`load_graphs`] but insists on exactly one graph.
pub fn load_graph(path: Option<&Path>, forced: Option<InputFormat>) -> Result<(Graph, InputInfo)> {
    let (mut graphs, info) = load_graphs(path, forced)?;
    if graphs.len() != 1 {
        bail!("expected one graph, found {}", graphs.len());
    }
    Ok((graphs.pop().expect("one graph"), info))
}

/// Parses `"0,2,5"` into vertex ids.
pub fn parse_vertex_list(text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().with_context(|| format!("bad vertex {s:?}")))
        .collect()
}
