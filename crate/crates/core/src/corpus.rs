//! Fixed test corpora: all trees up to isomorphism on few vertices, named
//! small graphs with cycles, and a handful of hypergraphs.

use std::collections::BTreeMap;

use crate::graph::{Graph, Hypergraph};
use crate::hypergraph::build_gap_family;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Named<T> {
    pub name: String,
    pub value: T,
}

impl<T> Named<T> {
    pub fn new(name: impl Into<String>, value: T) -> Self {
        Named {
            name: name.into(),
            value,
        }
    }
}

fn decode_prufer(n: usize, code: &[usize]) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &c in code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &c in code {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf remains");
        edges.push((leaf.min(c), leaf.max(c)));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

fn rooted_code(adj: &[Vec<usize>], v: usize, parent: Option<usize>) -> String {
    let mut kids: Vec<String> = adj[v]
        .iter()
        .filter(|&&u| Some(u) != parent)
        .map(|&u| rooted_code(adj, u, Some(v)))
        .collect();
    kids.sort();
    format!("({})", kids.concat())
}

/// The centre (one or two vertices) of a tree, by repeatedly removing leaves.
fn centers(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &u in &adj[v] {
                degree[u] -= 1;
                if degree[u] == 1 {
                    next.push(u);
                }
            }
        }
        layer = next;
    }
    layer
}

/// AHU encoding of an unrooted tree; equal iff the trees are isomorphic.
pub fn tree_canonical_form(g: &Graph) -> String {
    let n = g.len();
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbor_indices(v).to_vec()).collect();
    centers(&adj)
        .into_iter()
        .map(|c| rooted_code(&adj, c, None))
        .min()
        .unwrap_or_default()
}

/// One tree per isomorphism class on `n` vertices, labelled `x1..xn`, in a
/// fixed order (by maximal degree, then by canonical form).
pub fn trees_up_to_isomorphism(n: usize) -> Vec<Graph> {
    match n {
        0 => return Vec::new(),
        1 => return vec![Graph::path(1)],
        _ => {}
    }
    let mut classes: BTreeMap<String, Graph> = BTreeMap::new();
    let mut code = vec![0usize; n - 2];
    loop {
        let edges = decode_prufer(n, &code);
        let g = Graph::from_index_edges((1..=n).map(|i| format!("x{i}")).collect(), edges);
        classes.entry(tree_canonical_form(&g)).or_insert(g);
        // next code in lexicographic order
        let mut k = code.len();
        loop {
            if k == 0 {
                let mut trees: Vec<(usize, String, Graph)> = classes
                    .into_iter()
                    .map(|(c, g)| (g.max_degree(), c, g))
                    .collect();
                trees.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
                return trees.into_iter().map(|(_, _, g)| g).collect();
            }
            k -= 1;
            if code[k] + 1 < n {
                code[k] += 1;
                break;
            }
            code[k] = 0;
        }
    }
}

fn tree_name(g: &Graph) -> String {
    let n = g.len();
    let delta = g.max_degree();
    if n == 1 {
        "K1".into()
    } else if delta == n - 1 {
        format!("K_1,{}", n - 1)
    } else if delta == 2 {
        format!("P_{n}")
    } else {
        let degrees: Vec<String> = {
            let mut d: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
            d.sort_unstable_by(|a, b| b.cmp(a));
            d.iter().map(ToString::to_string).collect()
        };
        format!("T{n}[{}]", degrees.join(""))
    }
}

fn named_trees(sizes: impl IntoIterator<Item = usize>) -> Vec<Named<Graph>> {
    sizes
        .into_iter()
        .flat_map(trees_up_to_isomorphism)
        .map(|g| Named::new(tree_name(&g), g))
        .collect()
}

/// Every tree on 2 to 6 vertices up to isomorphism, plus `P_7` and
/// `K_{1,6}`.
pub fn tree_corpus() -> Vec<Named<Graph>> {
    let mut out = named_trees(2..=6);
    out.push(Named::new("P_7", Graph::path(7)));
    out.push(Named::new("K_1,6", Graph::star(6)));
    out
}

/// Every tree on 2 to 7 vertices up to isomorphism. Contains the paths,
/// stars, spiders and caterpillars on at most seven vertices.
pub fn extended_tree_corpus() -> Vec<Named<Graph>> {
    named_trees(2..=7)
}

/// Small graphs with cycles, on which only the oracle applies.
pub fn cyclic_corpus() -> Vec<Named<Graph>> {
    let paw = Graph::new(
        ["a", "b", "c", "d"],
        [("a", "b"), ("b", "c"), ("a", "c"), ("c", "d")],
    )
    .expect("valid graph");
    let bull = Graph::new(
        ["a", "b", "c", "d", "e"],
        [("a", "b"), ("b", "c"), ("a", "c"), ("b", "d"), ("c", "e")],
    )
    .expect("valid graph");
    vec![
        Named::new("C_3", Graph::cycle(3)),
        Named::new("C_4", Graph::cycle(4)),
        Named::new("C_5", Graph::cycle(5)),
        Named::new("K_4", Graph::complete(4)),
        Named::new("paw", paw),
        Named::new("bull", bull),
    ]
}

/// Trees on at most six vertices together with the cyclic corpus.
pub fn graph_corpus() -> Vec<Named<Graph>> {
    let mut out = named_trees(1..=6);
    out.extend(cyclic_corpus());
    out
}

pub fn hypergraph_corpus() -> Vec<Named<Hypergraph>> {
    fn hg(vertices: &[&str], edges: &[&[&str]]) -> Hypergraph {
        Hypergraph::new(
            vertices.iter().copied(),
            edges.iter().map(|e| e.iter().copied()),
        )
        .expect("valid hypergraph")
    }
    vec![
        Named::new("edge", hg(&["a", "b"], &[&["a", "b"]])),
        Named::new("triple", hg(&["a", "b", "c"], &[&["a", "b", "c"]])),
        Named::new(
            "K_3",
            hg(&["a", "b", "c"], &[&["a", "b"], &["b", "c"], &["a", "c"]]),
        ),
        Named::new(
            "K_4",
            hg(
                &["a", "b", "c", "d"],
                &[
                    &["a", "b"],
                    &["a", "c"],
                    &["a", "d"],
                    &["b", "c"],
                    &["b", "d"],
                    &["c", "d"],
                ],
            ),
        ),
        Named::new(
            "C_5",
            hg(
                &["a", "b", "c", "d", "e"],
                &[
                    &["a", "b"],
                    &["b", "c"],
                    &["c", "d"],
                    &["d", "e"],
                    &["a", "e"],
                ],
            ),
        ),
        Named::new(
            "two_triples",
            hg(
                &["a", "b", "c", "d", "e"],
                &[&["a", "b", "c"], &["c", "d", "e"]],
            ),
        ),
        Named::new(
            "K_4^3",
            hg(
                &["a", "b", "c", "d"],
                &[
                    &["a", "b", "c"],
                    &["a", "b", "d"],
                    &["a", "c", "d"],
                    &["b", "c", "d"],
                ],
            ),
        ),
        Named::new("H_1", build_gap_family(1).expect("m >= 1")),
        Named::new("H_2", build_gap_family(2).expect("m >= 1")),
    ]
}
