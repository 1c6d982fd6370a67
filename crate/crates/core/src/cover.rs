//! Partial t-cover ideals.
//!
//! `J_t(G)` is built two ways: as the intersection of the primes
//! `<x, x_{i_1}, ..., x_{i_t}>` over vertices `x` and t-subsets of `N(x)`, and
//! from the monomials of the minimal partial t-covers. A set `W` is a partial
//! t-cover when every vertex is in `W` or has at most `t - 1` neighbours
//! outside `W`.

use crate::algebra::{alexander_dual, Monomial, MonomialIdeal, MonomialPrime, Ring};
use crate::error::{Error, Result};
use crate::graph::{Graph, SpecialVertex};

/// Subset enumeration over all vertex sets is limited to this many vertices.
pub const MAX_BRUTE_FORCE_VERTICES: usize = 24;

pub(crate) fn check_t(t: usize) -> Result<()> {
    if t == 0 {
        Err(Error::InvalidParameter("t must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// Calls `f` on every `k`-subset of `items` in lexicographic order.
pub(crate) fn for_each_subset<T: Copy>(items: &[T], k: usize, f: &mut dyn FnMut(&[T])) {
    fn go<T: Copy>(items: &[T], k: usize, from: usize, cur: &mut Vec<T>, f: &mut dyn FnMut(&[T])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        let need = k - cur.len();
        for i in from..=items.len().saturating_sub(need) {
            if i >= items.len() {
                break;
            }
            cur.push(items[i]);
            go(items, k, i + 1, cur, f);
            cur.pop();
        }
    }
    if k <= items.len() {
        go(items, k, 0, &mut Vec::with_capacity(k), f);
    }
}

/// `w` must be sorted vertex indices.
pub fn is_partial_cover(g: &Graph, t: usize, w: &[usize]) -> bool {
    let inside = |v: usize| w.binary_search(&v).is_ok();
    (0..g.len()).all(|x| {
        inside(x)
            || g.neighbor_indices(x)
                .iter()
                .filter(|&&y| !inside(y))
                .count()
                < t
    })
}

fn mask_members(n: usize, mask: u32) -> Vec<usize> {
    (0..n).filter(|&i| mask & (1 << i) != 0).collect()
}

/// Minimal partial t-covers, ordered by size and then lexicographically.
pub fn enumerate_minimal_partial_covers(g: &Graph, t: usize) -> Result<Vec<Vec<usize>>> {
    check_t(t)?;
    let n = g.len();
    if n > MAX_BRUTE_FORCE_VERTICES {
        return Err(Error::CapExceeded(format!(
            "partial cover enumeration is limited to {MAX_BRUTE_FORCE_VERTICES} vertices"
        )));
    }
    let covers: Vec<bool> = (0u32..(1 << n))
        .map(|mask| is_partial_cover(g, t, &mask_members(n, mask)))
        .collect();
    // Covers are closed upwards, so minimality only needs single removals.
    let mut out: Vec<Vec<usize>> = (0u32..(1 << n))
        .filter(|&mask| {
            covers[mask as usize]
                && (0..n)
                    .filter(|i| mask & (1 << i) != 0)
                    .all(|i| !covers[(mask & !(1 << i)) as usize])
        })
        .map(|mask| mask_members(n, mask))
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

/// `J_t(G)` as an intersection of primes, folded vertex by vertex.
///
/// Vertices of degree below `t` contribute nothing; if no vertex contributes,
/// the result is the unit ideal.
pub fn partial_cover_ideal(g: &Graph, t: usize) -> Result<MonomialIdeal> {
    check_t(t)?;
    let ring = g.ring();
    let mut acc = MonomialIdeal::unit(ring.clone());
    for x in 0..g.len() {
        let mut primes = Vec::new();
        for_each_subset(g.neighbor_indices(x), t, &mut |sub| {
            let mut support = sub.to_vec();
            support.push(x);
            primes.push(MonomialPrime::new(support));
        });
        for p in primes {
            acc = acc.intersection(&MonomialIdeal::from_prime(ring.clone(), &p))?;
        }
    }
    Ok(acc)
}

/// `J_t(G)` generated by the monomials `x_W` of the minimal partial t-covers.
pub fn partial_cover_ideal_from_covers(g: &Graph, t: usize) -> Result<MonomialIdeal> {
    let n = g.len();
    let gens = enumerate_minimal_partial_covers(g, t)?
        .into_iter()
        .map(|w| Monomial::from_support(n, w))
        .collect();
    MonomialIdeal::new(g.ring(), gens)
}

/// The closed form for `J_t(K_{1,n})` over `z, x1, ..., xn`: `z` together with
/// all products of `n - t + 1` distinct leaves.
pub fn star_generators(n: usize, t: usize) -> Result<MonomialIdeal> {
    check_t(t)?;
    if t > n {
        return Err(Error::InvalidParameter(format!("t = {t} exceeds n = {n}")));
    }
    let ring = Ring::new(std::iter::once("z".to_string()).chain((1..=n).map(|i| format!("x{i}"))));
    let nv = n + 1;
    let mut gens = vec![Monomial::var(nv, 0)];
    let leaves: Vec<usize> = (1..=n).collect();
    for_each_subset(&leaves, n - t + 1, &mut |sub| {
        gens.push(Monomial::from_support(nv, sub.iter().copied()));
    });
    MonomialIdeal::new(ring, gens)
}

/// `I_t(G)`, the Alexander dual of `J_t(G)`.
pub fn generalized_edge_ideal(g: &Graph, t: usize) -> Result<MonomialIdeal> {
    let j = partial_cover_ideal(g, t)?;
    if j.is_unit() {
        return Err(Error::UnitCoverIdeal);
    }
    alexander_dual(&j)
}

/// `I_t(G)` built directly as the sum over vertices `x` of the ideals
/// `<x * x_{i_1} ... x_{i_t}>` for t-subsets of `N(x)`.
pub fn generalized_edge_ideal_from_neighborhoods(g: &Graph, t: usize) -> Result<MonomialIdeal> {
    check_t(t)?;
    let n = g.len();
    let mut gens = Vec::new();
    for x in 0..n {
        for_each_subset(g.neighbor_indices(x), t, &mut |sub| {
            gens.push(Monomial::from_support(n, sub.iter().copied().chain([x])));
        });
    }
    MonomialIdeal::new(g.ring(), gens)
}

/// The edge ideal `<x*y : {x,y} in E>`.
pub fn edge_ideal(g: &Graph) -> MonomialIdeal {
    let n = g.len();
    let gens = g
        .edge_indices()
        .iter()
        .map(|&(u, v)| Monomial::from_support(n, [u, v]))
        .collect();
    MonomialIdeal::new(g.ring(), gens).expect("arity matches")
}

/// The three shapes a minimal generator of `J_t` of a tree can take, seen
/// from a special vertex `x` with neighbours `y_1, ..., y_d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum GeneratorKind {
    /// Exactly `d - t + 1` of the `y`'s, not `x`.
    LeafSubset,
    /// `x` and none of the `y`'s.
    Center,
    /// `x` and `y_d`, no other `y`.
    CenterWithLast,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassifiedGenerator {
    pub generator: Monomial,
    pub kind: GeneratorKind,
    /// The frame variables (`x` and the `y`'s) dividing the generator.
    pub frame_vars: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeGeneratorReport {
    pub special: SpecialVertex,
    /// `y_1, ..., y_d`; leaves first, the possibly non-leaf neighbour last.
    pub frame: Vec<usize>,
    pub entries: Vec<ClassifiedGenerator>,
}

/// Sorts the minimal generators of `J_t` of a tree into the three shapes.
///
/// Fails with [`Error::Integrity`] if some generator has none of them.
/// Requires the special vertex to have at least `t` neighbours.
pub fn classify_tree_generators(g: &Graph, t: usize) -> Result<TreeGeneratorReport> {
    check_t(t)?;
    let special = g.find_special_vertex()?;
    let mut frame = special.leaf_neighbors.clone();
    frame.extend(special.other);
    let d = frame.len();
    if d < t {
        return Err(Error::InvalidParameter(format!(
            "special vertex {} has degree {d} < t = {t}",
            g.label(special.vertex)
        )));
    }
    let x = special.vertex;
    let y_last = *frame.last().expect("d >= t >= 1");
    let j = partial_cover_ideal(g, t)?;
    let mut entries = Vec::with_capacity(j.len());
    for m in j.generators() {
        let has = |v: usize| m.exp(v) > 0;
        let ys: Vec<usize> = frame.iter().copied().filter(|&y| has(y)).collect();
        let kind = match (has(x), ys.as_slice()) {
            (false, ys) if ys.len() == d - t + 1 => GeneratorKind::LeafSubset,
            (true, []) => GeneratorKind::Center,
            (true, [y]) if *y == y_last => GeneratorKind::CenterWithLast,
            _ => {
                return Err(Error::Integrity(format!(
                    "generator {} of J_{t} fits none of the three shapes around {}",
                    m.display(j.ring()),
                    g.label(x)
                )))
            }
        };
        let mut frame_vars = ys;
        if has(x) {
            frame_vars.insert(0, x);
        }
        entries.push(ClassifiedGenerator {
            generator: m.clone(),
            kind,
            frame_vars,
        });
    }
    Ok(TreeGeneratorReport {
        special,
        frame,
        entries,
    })
}
