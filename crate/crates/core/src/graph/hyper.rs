use std::collections::HashMap;

use super::build_index;
use crate::algebra::Ring;
use crate::error::{Error, Result};

/// A vertex set with a family of vertex subsets as edges.
///
/// Edges are stored as sorted index lists, deduplicated and kept in
/// canonical order. Simplicity (every edge has at least two vertices and no
/// edge contains another) is checked by [`Hypergraph::check_simple`] rather
/// than at construction.
#[derive(Clone, Debug)]
pub struct Hypergraph {
    vertices: Vec<String>,
    index: HashMap<String, usize>,
    edges: Vec<Vec<usize>>,
}

impl PartialEq for Hypergraph {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.edges == other.edges
    }
}

impl Eq for Hypergraph {}

impl Hypergraph {
    pub fn new<V, E, S>(
        vertices: impl IntoIterator<Item = V>,
        edges: impl IntoIterator<Item = E>,
    ) -> Result<Self>
    where
        V: Into<String>,
        E: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let index = build_index(&vertices)?;
        let mut es = Vec::new();
        for edge in edges {
            let mut e = edge
                .into_iter()
                .map(|l| {
                    index
                        .get(l.as_ref())
                        .copied()
                        .ok_or_else(|| Error::UnknownVertex(l.as_ref().to_string()))
                })
                .collect::<Result<Vec<_>>>()?;
            e.sort_unstable();
            e.dedup();
            es.push(e);
        }
        es.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        es.dedup();
        Ok(Hypergraph {
            vertices,
            index,
            edges: es,
        })
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge_labels(&self, e: &[usize]) -> Vec<String> {
        e.iter().map(|&i| self.vertices[i].clone()).collect()
    }

    pub fn ring(&self) -> Ring {
        Ring::new(self.vertices.iter().cloned())
    }

    pub(crate) fn check_min_edge_size(&self) -> Result<()> {
        match self.edges.iter().find(|e| e.len() < 2) {
            Some(e) => Err(Error::EdgeTooSmall(self.edge_labels(e))),
            None => Ok(()),
        }
    }

    pub fn check_simple(&self) -> Result<()> {
        self.check_min_edge_size()?;
        for (i, a) in self.edges.iter().enumerate() {
            for (j, b) in self.edges.iter().enumerate() {
                if i != j && a.iter().all(|v| b.binary_search(v).is_ok()) {
                    return Err(Error::NonSimpleHypergraph(format!(
                        "edge {:?} is contained in {:?}",
                        self.edge_labels(a),
                        self.edge_labels(b)
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn is_simple(&self) -> bool {
        self.check_simple().is_ok()
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("vertices: {}\n", self.vertices.join(" "));
        for e in &self.edges {
            s.push_str(&format!("edge: {}\n", self.edge_labels(e).join(" ")));
        }
        s
    }
}
