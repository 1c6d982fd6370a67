//! Cover ideals and chromatic numbers of hypergraphs, and the family `H_m`
//! whose cover ideal has index of stability `m + 1` while `χ(H_m) = 2`.

use serde_json::{json, Value};

use crate::algebra::{alexander_dual, Monomial, MonomialIdeal};
use crate::analysis::{astab_star, empirical_astab_with, Astab, StabilityReport, SCHEMA_VERSION};
use crate::cover::star_generators;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::graph::Hypergraph;

/// Largest `m` accepted by [`verify_gap`] without `force`.
pub const GAP_CAP: usize = 3;

/// The ideal generated by `x_E` for each edge `E`.
pub fn hypergraph_edge_ideal(h: &Hypergraph) -> MonomialIdeal {
    let n = h.len();
    let gens = h
        .edges()
        .iter()
        .map(|e| Monomial::from_support(n, e.iter().copied()))
        .collect();
    MonomialIdeal::new(h.ring(), gens).expect("arity matches")
}

/// `<x_W : W a minimal vertex cover>`, i.e. the intersection of the primes
/// generated by the edges.
pub fn hypergraph_cover_ideal(h: &Hypergraph) -> Result<MonomialIdeal> {
    h.check_simple()?;
    alexander_dual(&hypergraph_edge_ideal(h))
}

/// Least number of colours with no monochromatic edge.
pub fn chromatic_number(h: &Hypergraph) -> Result<usize> {
    h.check_min_edge_size()?;
    if h.is_empty() {
        return Err(Error::EmptyGraph);
    }
    // edges grouped by their last vertex, so each is checked once all of its
    // vertices are coloured
    let mut closing: Vec<Vec<&[usize]>> = vec![Vec::new(); h.len()];
    for e in h.edges() {
        closing[*e.last().expect("edges have two vertices")].push(e);
    }
    let mut colours = vec![0usize; h.len()];
    (1..=h.len())
        .find(|&k| colour_from(1, k, &closing, &mut colours))
        .ok_or_else(|| Error::Integrity("no proper colouring with one colour per vertex".into()))
}

/// Colours vertices `v..` given colours for `..v`; vertex 0 keeps colour 0.
fn colour_from(v: usize, k: usize, closing: &[Vec<&[usize]>], colours: &mut [usize]) -> bool {
    let ok = |colours: &[usize], v: usize| {
        closing[v]
            .iter()
            .all(|e| e.iter().any(|&u| colours[u] != colours[e[0]]))
    };
    if v == colours.len() {
        return true;
    }
    for c in 0..k {
        colours[v] = c;
        if ok(colours, v) && colour_from(v + 1, k, closing, colours) {
            return true;
        }
    }
    false
}

/// `H_m`: vertices `z, x_1, ..., x_{m+2}`, edges `{z, x_i, x_j}` for `i < j`.
pub fn build_gap_family(m: usize) -> Result<Hypergraph> {
    if m == 0 {
        return Err(Error::InvalidParameter("m must be at least 1".into()));
    }
    let mut vertices = vec!["z".to_string()];
    vertices.extend((1..=m + 2).map(|i| format!("x{i}")));
    let mut edges = Vec::new();
    for i in 1..=m + 2 {
        for j in i + 1..=m + 2 {
            edges.push(vec!["z".to_string(), format!("x{i}"), format!("x{j}")]);
        }
    }
    Hypergraph::new(vertices, edges)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapReport {
    pub m: usize,
    pub chromatic: usize,
    /// From the star formula, since `J(H_m) = J_2(K_{1,m+2})`.
    pub astab: usize,
    /// `J(H_m)` equals the star ideal `J_2(K_{1,m+2})`.
    pub cover_is_star_ideal: bool,
    /// Oracle computation up to `s_max`.
    pub oracle: StabilityReport,
}

impl GapReport {
    pub fn oracle_confirms(&self) -> bool {
        self.oracle.empirical == Astab::Empirical(self.astab)
    }

    /// `χ - 1 + m <= astab`.
    pub fn gap_holds(&self) -> bool {
        self.chromatic + self.m <= self.astab + 1
    }

    pub fn gap_is_tight(&self) -> bool {
        self.chromatic + self.m == self.astab + 1
    }

    /// `χ - 1 <= astab`.
    pub fn baseline_holds(&self) -> bool {
        self.chromatic <= self.astab + 1
    }

    pub fn all_hold(&self) -> bool {
        self.cover_is_star_ideal
            && self.oracle_confirms()
            && self.gap_holds()
            && self.baseline_holds()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "schema": SCHEMA_VERSION,
            "m": self.m,
            "chromatic_number": self.chromatic,
            "astab": self.astab,
            "s_max": self.oracle.s_max,
            "empirical_astab": self.oracle.empirical,
            "checks": {
                "cover_is_star_ideal": self.cover_is_star_ideal,
                "oracle_confirms": self.oracle_confirms(),
                "gap_holds": self.gap_holds(),
                "gap_is_tight": self.gap_is_tight(),
                "baseline_holds": self.baseline_holds(),
            },
        })
    }
}

/// Checks `χ(H_m) - 1 + m <= astab(J(H_m))`. The oracle runs up to
/// `s_max` (default `astab + 1`). `m` above [`GAP_CAP`] needs `force`.
pub fn verify_gap(
    m: usize,
    s_max: Option<usize>,
    force: bool,
    exec: Execution,
) -> Result<GapReport> {
    if m > GAP_CAP && !force {
        return Err(Error::CapExceeded(format!("m = {m} > {GAP_CAP}")));
    }
    let h = build_gap_family(m)?;
    let chromatic = chromatic_number(&h)?;
    let cover = hypergraph_cover_ideal(&h)?;
    let astab = astab_star(m + 2, 2)?;
    let cover_is_star_ideal = cover == star_generators(m + 2, 2)?;
    let oracle = empirical_astab_with(&cover, s_max.unwrap_or(astab + 1), exec)?;
    Ok(GapReport {
        m,
        chromatic,
        astab,
        cover_is_star_ideal,
        oracle,
    })
}

/// The oracle stability report of `J(H)` together with `χ(H)`.
pub fn hypergraph_stability(
    h: &Hypergraph,
    s_max: usize,
    exec: Execution,
) -> Result<(usize, StabilityReport)> {
    let cover = hypergraph_cover_ideal(h)?;
    Ok((
        chromatic_number(h)?,
        empirical_astab_with(&cover, s_max, exec)?,
    ))
}
