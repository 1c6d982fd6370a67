//! Finite simple graphs and hypergraphs with labeled vertices.
//!
//! The order in which vertices are listed is the variable order of every
//! ideal built from the graph. Vertex sets are passed around as sorted lists
//! of indices into that order.

mod hyper;
mod parse;

use std::collections::HashMap;
use std::fmt;

pub use hyper::Hypergraph;
pub use parse::{parse_graph, parse_hypergraph};

use crate::algebra::Ring;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct Graph {
    vertices: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.edges == other.edges
    }
}

impl Eq for Graph {}

/// An induced `K_{1,r}`: a center adjacent to every leaf, no leaf-leaf edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarShape {
    pub center: String,
    pub leaves: Vec<String>,
}

/// A vertex all of whose neighbours, except possibly one, are leaves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialVertex {
    pub vertex: usize,
    /// Degree-one neighbours, in vertex order.
    pub leaf_neighbors: Vec<usize>,
    /// The remaining neighbour, if it has degree greater than one.
    pub other: Option<usize>,
}

pub(crate) fn build_index(vertices: &[String]) -> Result<HashMap<String, usize>> {
    let mut index = HashMap::with_capacity(vertices.len());
    for (i, v) in vertices.iter().enumerate() {
        if index.insert(v.clone(), i).is_some() {
            return Err(Error::DuplicateVertex(v.clone()));
        }
    }
    Ok(index)
}

impl Graph {
    pub fn new<V, A, B>(
        vertices: impl IntoIterator<Item = V>,
        edges: impl IntoIterator<Item = (A, B)>,
    ) -> Result<Self>
    where
        V: Into<String>,
        A: AsRef<str>,
        B: AsRef<str>,
    {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let index = build_index(&vertices)?;
        let mut pairs = Vec::new();
        for (a, b) in edges {
            let (a, b) = (a.as_ref(), b.as_ref());
            let u = *index
                .get(a)
                .ok_or_else(|| Error::UnknownVertex(a.to_string()))?;
            let v = *index
                .get(b)
                .ok_or_else(|| Error::UnknownVertex(b.to_string()))?;
            pairs.push((u, v));
        }
        Graph::from_parts(vertices, index, pairs)
    }

    pub(crate) fn from_parts(
        vertices: Vec<String>,
        index: HashMap<String, usize>,
        pairs: Vec<(usize, usize)>,
    ) -> Result<Self> {
        let mut adj = vec![Vec::new(); vertices.len()];
        let mut edges = Vec::with_capacity(pairs.len());
        for (u, v) in pairs {
            if u == v {
                return Err(Error::SelfLoop(vertices[u].clone()));
            }
            let e = (u.min(v), u.max(v));
            if adj[u].contains(&v) {
                return Err(Error::DuplicateEdge(
                    vertices[e.0].clone(),
                    vertices[e.1].clone(),
                ));
            }
            adj[u].push(v);
            adj[v].push(u);
            edges.push(e);
        }
        adj.iter_mut().for_each(|a| a.sort_unstable());
        edges.sort_unstable();
        Ok(Graph {
            vertices,
            index,
            adj,
            edges,
        })
    }

    /// Builds a graph from labels and index pairs that are known to be valid.
    pub(crate) fn from_index_edges(vertices: Vec<String>, pairs: Vec<(usize, usize)>) -> Self {
        let index = build_index(&vertices).expect("distinct labels");
        Graph::from_parts(vertices, index, pairs).expect("valid edges")
    }

    /// The path `x1 - x2 - ... - xn`.
    pub fn path(n: usize) -> Self {
        let vs = (1..=n).map(|i| format!("x{i}")).collect();
        Graph::from_index_edges(vs, (1..n).map(|i| (i - 1, i)).collect())
    }

    /// The cycle `x1 - ... - xn - x1`, `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        let vs = (1..=n).map(|i| format!("x{i}")).collect();
        Graph::from_index_edges(vs, (0..n).map(|i| (i, (i + 1) % n)).collect())
    }

    /// The star `K_{1,n}` on `z, x1, ..., xn` with center `z`.
    pub fn star(n: usize) -> Self {
        let vs = std::iter::once("z".to_string())
            .chain((1..=n).map(|i| format!("x{i}")))
            .collect();
        Graph::from_index_edges(vs, (1..=n).map(|i| (0, i)).collect())
    }

    pub fn complete(n: usize) -> Self {
        let vs = (1..=n).map(|i| format!("x{i}")).collect();
        let mut es = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                es.push((i, j));
            }
        }
        Graph::from_index_edges(vs, es)
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

    pub fn label(&self, i: usize) -> &str {
        &self.vertices[i]
    }

    pub fn labels(&self, set: &[usize]) -> Vec<&str> {
        set.iter().map(|&i| self.label(i)).collect()
    }

    /// Edges as index pairs `(u, v)` with `u < v`, sorted.
    pub fn edge_indices(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edges(&self) -> Vec<(&str, &str)> {
        self.edges
            .iter()
            .map(|&(u, v)| (self.label(u), self.label(v)))
            .collect()
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    pub fn indices_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<Vec<usize>> {
        let mut out = labels
            .iter()
            .map(|l| self.index_of(l.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }

    /// The variable ring of the graph, one variable per vertex.
    pub fn ring(&self) -> Ring {
        Ring::new(self.vertices.iter().cloned())
    }

    pub fn neighbors(&self, v: &str) -> Result<Vec<&str>> {
        let i = self.index_of(v)?;
        Ok(self.adj[i].iter().map(|&j| self.label(j)).collect())
    }

    pub fn neighbor_indices(&self, i: usize) -> &[usize] {
        &self.adj[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].len()
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// `Δ(G)`; zero for an edgeless or empty graph.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn induced_subgraph<S: AsRef<str>>(&self, labels: &[S]) -> Result<Graph> {
        Ok(self.induced_by_indices(&self.indices_of(labels)?))
    }

    /// Induced subgraph on sorted, deduplicated vertex indices.
    pub fn induced_by_indices(&self, set: &[usize]) -> Graph {
        let mut local = vec![usize::MAX; self.len()];
        for (k, &i) in set.iter().enumerate() {
            local[i] = k;
        }
        let pairs = self
            .edges
            .iter()
            .filter(|&&(u, v)| local[u] != usize::MAX && local[v] != usize::MAX)
            .map(|&(u, v)| (local[u], local[v]))
            .collect();
        let vs = set.iter().map(|&i| self.vertices[i].clone()).collect();
        Graph::from_index_edges(vs, pairs)
    }

    fn component_count(&self) -> usize {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut count = 0;
        let mut stack = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            count += 1;
            seen[start] = true;
            stack.push(start);
            while let Some(u) = stack.pop() {
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
        }
        count
    }

    pub fn is_connected(&self) -> Result<bool> {
        if self.is_empty() {
            return Err(Error::EmptyGraph);
        }
        Ok(self.component_count() == 1)
    }

    /// Whether the vertices in `set` induce a connected subgraph.
    pub fn is_connected_set(&self, set: &[usize]) -> bool {
        !set.is_empty() && self.induced_by_indices(set).component_count() == 1
    }

    pub fn is_tree(&self) -> Result<bool> {
        Ok(self.is_connected()? && self.edges.len() + 1 == self.len())
    }

    pub(crate) fn require_tree(&self) -> Result<()> {
        if self.is_tree()? {
            Ok(())
        } else {
            Err(Error::NotATree("graph is disconnected or has a cycle"))
        }
    }

    /// Recognizes `K_{1,r}`, `r >= 1`, as a labeled graph. On a single edge
    /// both endpoints qualify as center; the earlier one is returned.
    pub fn star_shape(&self) -> Option<StarShape> {
        let n = self.len();
        if n < 2 || self.edges.len() != n - 1 {
            return None;
        }
        let center = (0..n).find(|&i| self.degree(i) == n - 1)?;
        Some(StarShape {
            center: self.vertices[center].clone(),
            leaves: self.adj[center]
                .iter()
                .map(|&j| self.vertices[j].clone())
                .collect(),
        })
    }

    /// The earliest vertex with at least one leaf neighbour and at most one
    /// neighbour of degree greater than one.
    pub fn find_special_vertex(&self) -> Result<SpecialVertex> {
        self.require_tree()?;
        if self.len() < 2 {
            return Err(Error::NotATree("need at least two vertices"));
        }
        for x in 0..self.len() {
            let (leaves, inner): (Vec<usize>, Vec<usize>) =
                self.adj[x].iter().partition(|&&y| self.degree(y) == 1);
            if !leaves.is_empty() && inner.len() <= 1 {
                return Ok(SpecialVertex {
                    vertex: x,
                    leaf_neighbors: leaves,
                    other: inner.first().copied(),
                });
            }
        }
        Err(Error::Integrity("tree without a special vertex".into()))
    }

    /// Vertex sets inducing `K_{1,r}` with `rmin <= r <= rmax`, ordered by
    /// size and then lexicographically on the sorted indices.
    pub fn enumerate_induced_stars(&self, rmin: usize, rmax: usize) -> Vec<Vec<usize>> {
        let rmin = rmin.max(1);
        let mut out: Vec<Vec<usize>> = Vec::new();
        for c in 0..self.len() {
            let nbrs = &self.adj[c];
            let mut chosen = Vec::new();
            self.independent_subsets(nbrs, 0, rmin, rmax, &mut chosen, &mut |leaves| {
                let mut set = leaves.to_vec();
                set.push(c);
                set.sort_unstable();
                out.push(set);
            });
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out.dedup();
        out
    }

    fn independent_subsets(
        &self,
        pool: &[usize],
        from: usize,
        rmin: usize,
        rmax: usize,
        chosen: &mut Vec<usize>,
        emit: &mut dyn FnMut(&[usize]),
    ) {
        if chosen.len() >= rmin {
            emit(chosen);
        }
        if chosen.len() == rmax {
            return;
        }
        for k in from..pool.len() {
            let v = pool[k];
            if chosen.iter().all(|&u| !self.adjacent(u, v)) {
                chosen.push(v);
                self.independent_subsets(pool, k + 1, rmin, rmax, chosen, emit);
                chosen.pop();
            }
        }
    }

    /// All vertex sets inducing a connected subgraph, ordered by size and
    /// then lexicographically.
    pub fn connected_subsets(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        assert!(n < 32, "connected subset enumeration is exponential");
        let mut out: Vec<Vec<usize>> = (1u32..(1 << n))
            .map(|mask| (0..n).filter(|&i| mask & (1 << i) != 0).collect::<Vec<_>>())
            .filter(|set| self.is_connected_set(set))
            .collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    /// Renders the graph in the text format accepted by [`parse_graph`].
    pub fn to_text(&self) -> String {
        let mut s = format!("vertices: {}\n", self.vertices.join(" "));
        for (u, v) in self.edges() {
            s.push_str(&format!("edge: {u} {v}\n"));
        }
        s
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let es: Vec<String> = self
            .edges()
            .iter()
            .map(|(u, v)| format!("{u}-{v}"))
            .collect();
        write!(
            f,
            "G(V = {{{}}}, E = {{{}}})",
            self.vertices.join(", "),
            es.join(", ")
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_edges() -> Graph {
        Graph::new(["a", "b", "c", "d"], [("a", "b"), ("c", "d")]).unwrap()
    }

    #[test]
    fn construction_rejects_bad_edges() {
        assert_eq!(
            Graph::new(["a"], [("a", "a")]).unwrap_err(),
            Error::SelfLoop("a".into())
        );
        assert_eq!(
            Graph::new(["a", "b"], [("a", "b"), ("b", "a")]).unwrap_err(),
            Error::DuplicateEdge("a".into(), "b".into())
        );
        assert_eq!(
            Graph::new(["a"], [("a", "q")]).unwrap_err(),
            Error::UnknownVertex("q".into())
        );
        assert!(Graph::new(["a", "a"], Vec::<(&str, &str)>::new()).is_err());
    }

    #[test]
    fn neighbors_examples() {
        assert_eq!(
            Graph::star(3).neighbors("z").unwrap(),
            vec!["x1", "x2", "x3"]
        );
        assert_eq!(Graph::path(3).neighbors("x2").unwrap(), vec!["x1", "x3"]);
        let iso = Graph::new(["v"], Vec::<(&str, &str)>::new()).unwrap();
        assert!(iso.neighbors("v").unwrap().is_empty());
        assert!(iso.neighbors("w").is_err());
    }

    #[test]
    fn induced_subgraph_examples() {
        let p4 = Graph::path(4);
        assert_eq!(
            p4.induced_subgraph(&["x1", "x2", "x3"]).unwrap(),
            Graph::path(3)
        );
        assert_eq!(p4.induced_subgraph(p4.vertices()).unwrap(), p4);
        let sub = p4.induced_subgraph(&["x1", "x4"]).unwrap();
        assert_eq!(sub.len(), 2);
        assert!(sub.edge_indices().is_empty());
        assert!(p4.induced_subgraph(&["x9"]).is_err());
    }

    #[test]
    fn connectivity_and_trees() {
        assert!(Graph::path(4).is_connected().unwrap());
        assert!(!two_edges().is_connected().unwrap());
        assert!(Graph::path(1).is_connected().unwrap());
        assert_eq!(Graph::path(0).is_connected(), Err(Error::EmptyGraph));

        assert!(Graph::star(4).is_tree().unwrap());
        assert!(!Graph::cycle(4).is_tree().unwrap());
        assert!(Graph::path(7).is_tree().unwrap());
    }

    #[test]
    fn max_degree_examples() {
        assert_eq!(Graph::star(5).max_degree(), 5);
        assert_eq!(Graph::path(4).max_degree(), 2);
        assert_eq!(Graph::path(1).max_degree(), 0);
    }

    #[test]
    fn star_shape_examples() {
        let g = Graph::new(["z", "a", "b", "c"], [("z", "a"), ("z", "b"), ("z", "c")]).unwrap();
        assert_eq!(
            g.star_shape(),
            Some(StarShape {
                center: "z".into(),
                leaves: vec!["a".into(), "b".into(), "c".into()]
            })
        );
        assert_eq!(Graph::path(4).star_shape(), None);
        let e = Graph::new(["u", "v"], [("u", "v")]).unwrap();
        assert_eq!(
            e.star_shape(),
            Some(StarShape {
                center: "u".into(),
                leaves: vec!["v".into()]
            })
        );
        assert_eq!(Graph::path(1).star_shape(), None);
        assert_eq!(Graph::cycle(3).star_shape(), None);
    }

    #[test]
    fn special_vertex_examples() {
        let s = Graph::star(3).find_special_vertex().unwrap();
        assert_eq!(
            (s.vertex, s.leaf_neighbors, s.other),
            (0, vec![1, 2, 3], None)
        );

        let s = Graph::path(4).find_special_vertex().unwrap();
        assert_eq!((s.vertex, s.leaf_neighbors, s.other), (1, vec![0], Some(2)));

        let s = Graph::path(2).find_special_vertex().unwrap();
        assert_eq!((s.vertex, s.leaf_neighbors, s.other), (0, vec![1], None));

        assert!(Graph::cycle(4).find_special_vertex().is_err());
        assert!(Graph::path(1).find_special_vertex().is_err());
    }

    #[test]
    fn induced_star_examples() {
        let p4 = Graph::path(4);
        assert_eq!(
            p4.enumerate_induced_stars(2, 2),
            vec![vec![0, 1, 2], vec![1, 2, 3]]
        );
        assert_eq!(
            Graph::star(3).enumerate_induced_stars(3, 3),
            vec![vec![0, 1, 2, 3]]
        );
        assert!(p4.enumerate_induced_stars(3, 3).is_empty());
        // r = 1 stars are edges, each listed once
        assert_eq!(p4.enumerate_induced_stars(1, 1).len(), 3);
    }

    #[test]
    fn connected_subsets_of_path() {
        // a path on n vertices has n(n+1)/2 connected subsets
        assert_eq!(Graph::path(5).connected_subsets().len(), 15);
        assert_eq!(two_edges().connected_subsets().len(), 6);
    }

    #[test]
    fn text_roundtrip() {
        let g = Graph::cycle(5);
        assert_eq!(parse_graph(&g.to_text()).unwrap(), g);
    }
}
