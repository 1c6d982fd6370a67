//! Text formats for graphs and hypergraphs.
//!
//! ```text
//! # a path on four vertices
//! vertices: x1 x2 x3 x4
//! edge: x1 x2
//! edge: x2 x3
//! edge: x3 x4
//! ```
//!
//! Hypergraph edges list two or more labels on one `edge:` line.

use super::{build_index, Graph, Hypergraph};
use crate::error::{Error, Result};

struct Raw {
    vertices: Vec<String>,
    edges: Vec<(usize, Vec<String>)>,
}

fn err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn scan(text: &str) -> Result<Raw> {
    let mut vertices: Option<Vec<String>> = None;
    let mut edges = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line_no = k + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, rest) = line.split_once(':').ok_or_else(|| {
            err(
                line_no,
                format!("expected `vertices:` or `edge:`, got `{line}`"),
            )
        })?;
        let labels: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
        match key.trim() {
            "vertices" => {
                if vertices.is_some() {
                    return Err(err(line_no, "duplicate `vertices:` line"));
                }
                build_index(&labels).map_err(|e| err(line_no, e.to_string()))?;
                vertices = Some(labels);
            }
            "edge" => {
                let vs = vertices
                    .as_ref()
                    .ok_or_else(|| err(line_no, "`edge:` before `vertices:`"))?;
                if labels.len() < 2 {
                    return Err(err(line_no, "an edge needs at least two labels"));
                }
                if let Some(bad) = labels.iter().find(|l| !vs.contains(l)) {
                    return Err(err(line_no, format!("unknown vertex `{bad}`")));
                }
                edges.push((line_no, labels));
            }
            other => return Err(err(line_no, format!("unknown key `{other}`"))),
        }
    }
    let vertices = vertices.ok_or_else(|| err(0, "missing `vertices:` line"))?;
    Ok(Raw { vertices, edges })
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let raw = scan(text)?;
    let index = build_index(&raw.vertices)?;
    let mut seen = std::collections::HashSet::new();
    let mut pairs = Vec::with_capacity(raw.edges.len());
    for (line, labels) in &raw.edges {
        if labels.len() != 2 {
            return Err(err(*line, "a graph edge has exactly two labels"));
        }
        let (u, v) = (index[&labels[0]], index[&labels[1]]);
        if u == v {
            return Err(err(*line, format!("loop at `{}`", labels[0])));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(err(
                *line,
                format!("duplicate edge {} {}", labels[0], labels[1]),
            ));
        }
        pairs.push((u, v));
    }
    Graph::from_parts(raw.vertices, index, pairs)
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph> {
    let raw = scan(text)?;
    Hypergraph::new(raw.vertices, raw.edges.into_iter().map(|(_, e)| e))
}
