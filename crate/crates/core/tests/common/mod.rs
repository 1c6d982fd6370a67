#![allow(dead_code)]

use covertool_core::algebra::{
    decompose_with, intersect_components, Algorithm, Monomial, MonomialIdeal, Ring,
};
use covertool_core::graph::Graph;
use covertool_core::Execution;
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

pub const NVARS: usize = 4;

pub fn monomial(nv: usize, max_exp: u32) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max_exp, nv).prop_map(Monomial::new)
}

pub fn ideal(nv: usize, max_exp: u32, max_gens: usize) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(monomial(nv, max_exp), 1..=max_gens)
        .prop_map(move |gens| MonomialIdeal::new(Ring::indexed("x", nv), gens).unwrap())
}

pub fn square_free_ideal(nv: usize, max_gens: usize) -> impl Strategy<Value = MonomialIdeal> {
    ideal(nv, 1, max_gens)
}

/// Random simple graph on at most `max_n` vertices.
pub fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        prop::collection::vec(any::<bool>(), pairs.len()).prop_map(move |mask| {
            let labels: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
            let edges: Vec<(String, String)> = pairs
                .iter()
                .zip(mask)
                .filter(|(_, keep)| *keep)
                .map(|(&(i, j), _)| (labels[i].clone(), labels[j].clone()))
                .collect();
            Graph::new(labels.clone(), edges).unwrap()
        })
    })
}

/// Random tree: vertex `i > 0` hangs off a uniformly chosen earlier vertex.
pub fn tree(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(|n| {
        let parents: Vec<BoxedStrategy<usize>> = (1..n).map(|i| (0..i).boxed()).collect();
        parents.prop_map(move |ps| {
            let labels: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
            let edges: Vec<(String, String)> = ps
                .iter()
                .enumerate()
                .map(|(k, &p)| (labels[p].clone(), labels[k + 1].clone()))
                .collect();
            Graph::new(labels.clone(), edges).unwrap()
        })
    })
}

/// Membership cross-laws for colon, intersection, sum and product.
pub fn check_membership_laws(
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    m: &Monomial,
    t: &Monomial,
) -> Result<(), TestCaseError> {
    let colon = i.colon(t).unwrap();
    prop_assert_eq!(colon.contains(m), i.contains(&m.mul(t)));
    prop_assert!(i.is_subset_of(&colon));

    let cap = i.intersection(j).unwrap();
    prop_assert_eq!(cap.contains(m), i.contains(m) && j.contains(m));

    let cup = i.sum(j).unwrap();
    prop_assert_eq!(cup.contains(m), i.contains(m) || j.contains(m));

    let prod = i.product(j).unwrap();
    prop_assert!(prod.is_subset_of(&cap));
    Ok(())
}

/// The decomposition intersects back to the ideal, is irredundant, and both
/// algorithms agree.
pub fn check_decomposition(i: &MonomialIdeal) -> Result<(), TestCaseError> {
    if !i.is_proper_nonzero() {
        return Ok(());
    }
    let split = decompose_with(i, Algorithm::Splitting, Execution::Sequential).unwrap();
    let incr = decompose_with(i, Algorithm::Incremental, Execution::Sequential).unwrap();
    prop_assert_eq!(&intersect_components(i.ring(), &split), i);
    let (mut a, mut b) = (split.clone(), incr);
    a.sort();
    b.sort();
    prop_assert_eq!(a, b);
    for (k, c) in split.iter().enumerate() {
        for (l, d) in split.iter().enumerate() {
            prop_assert!(k == l || !c.contains_component(d));
        }
    }
    Ok(())
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// All `k`-subsets of `items`, order preserved.
pub fn subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if items.len() < k {
        return Vec::new();
    }
    let (first, rest) = (items[0], &items[1..]);
    let mut out: Vec<Vec<usize>> = subsets(rest, k - 1)
        .into_iter()
        .map(|mut s| {
            s.insert(0, first);
            s
        })
        .collect();
    out.extend(subsets(rest, k));
    out
}

/// Every nonempty vertex subset.
pub fn nonempty_subsets(n: usize) -> Vec<Vec<usize>> {
    let all: Vec<usize> = (0..n).collect();
    (1..=n).flat_map(|k| subsets(&all, k)).collect()
}

/// `set` induces `K_{1,r}`, `r = |set| - 1 >= 1`.
pub fn is_induced_star(g: &Graph, set: &[usize]) -> bool {
    if set.len() < 2 {
        return false;
    }
    let r = set.len() - 1;
    let edges = set
        .iter()
        .enumerate()
        .flat_map(|(k, &u)| set[k + 1..].iter().map(move |&v| (u, v)))
        .filter(|&(u, v)| g.adjacent(u, v))
        .count();
    edges == r
        && set
            .iter()
            .any(|&c| set.iter().all(|&v| v == c || g.adjacent(c, v)))
}
