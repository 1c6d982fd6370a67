//! Associated primes of powers of `J_t(G)`: the oracle computation, the
//! closed forms for stars and trees, stability indices, persistence, and the
//! explicit witness for the maximal ideal of a star.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{
    associated_primes_with, has_maximal_associated_prime, Algorithm, Monomial, MonomialIdeal,
    MonomialPrime, Ring,
};
use crate::cover::{check_t, for_each_subset, partial_cover_ideal, star_generators};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::graph::Graph;

pub const SCHEMA_VERSION: u32 = 1;

pub type PrimeSet = BTreeSet<MonomialPrime>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Oracle,
    ClosedForm,
    Localized,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Oracle => "oracle",
            Method::ClosedForm => "closed_form",
            Method::Localized => "localized",
        }
    }
}

/// How [`ass_of_power`] computes the primes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AssMode {
    /// Decompose `J_t(G)^s` over the full ring.
    Direct,
    /// For each connected vertex set `P`, ask whether the maximal ideal of
    /// the subring on `P` is associated to `J_t(G_P)^s`.
    Localized,
    /// As `Localized`, but only induced stars are tried. Trees only.
    LocalizedStars,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssReport {
    pub graph: Graph,
    pub t: usize,
    pub s: usize,
    pub method: Method,
    pub primes: PrimeSet,
    pub checks: BTreeMap<String, bool>,
}

impl AssReport {
    pub fn ring(&self) -> Ring {
        self.graph.ring()
    }

    pub fn prime_labels(&self) -> Vec<Vec<String>> {
        prime_labels(&self.ring(), &self.primes)
    }

    pub fn contains_vertex_set(&self, set: &[usize]) -> bool {
        self.primes.contains(&MonomialPrime::new(set.to_vec()))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "schema": SCHEMA_VERSION,
            "graph": graph_json(&self.graph),
            "t": self.t,
            "s": self.s,
            "method": self.method,
            "primes": self.prime_labels(),
            "checks": self.checks,
        })
    }
}

pub fn graph_json(g: &Graph) -> Value {
    json!({
        "vertices": g.vertices(),
        "edges": g.edges().iter().map(|(u, v)| [*u, *v]).collect::<Vec<_>>(),
    })
}

pub fn prime_labels(ring: &Ring, primes: &PrimeSet) -> Vec<Vec<String>> {
    primes
        .iter()
        .map(|p| p.labels(ring).into_iter().map(String::from).collect())
        .collect()
}

fn check_s(s: usize) -> Result<u32> {
    if s == 0 {
        return Err(Error::InvalidParameter("s must be at least 1".into()));
    }
    u32::try_from(s).map_err(|_| Error::InvalidParameter(format!("power {s} is too large")))
}

fn proper_cover_ideal(g: &Graph, t: usize) -> Result<MonomialIdeal> {
    check_t(t)?;
    let j = partial_cover_ideal(g, t)?;
    if j.is_unit() {
        return Err(Error::UnitCoverIdeal);
    }
    Ok(j)
}

fn require_tree(g: &Graph) -> Result<()> {
    if g.is_empty() || !g.is_tree()? {
        return Err(Error::TreesOnly);
    }
    Ok(())
}

pub fn ass_of_power(g: &Graph, t: usize, s: usize, mode: AssMode) -> Result<AssReport> {
    ass_of_power_with(g, t, s, mode, Execution::default())
}

pub fn ass_of_power_with(
    g: &Graph,
    t: usize,
    s: usize,
    mode: AssMode,
    exec: Execution,
) -> Result<AssReport> {
    let power = check_s(s)?;
    let j = proper_cover_ideal(g, t)?;
    let (method, primes) = match mode {
        AssMode::Direct => (
            Method::Oracle,
            associated_primes_with(&j.power(power), Algorithm::Splitting, exec)?,
        ),
        AssMode::Localized => (
            Method::Localized,
            localized(g, t, power, g.connected_subsets(), exec)?,
        ),
        AssMode::LocalizedStars => {
            require_tree(g)?;
            let stars = g.enumerate_induced_stars(1, g.len());
            (Method::Localized, localized(g, t, power, stars, exec)?)
        }
    };
    Ok(AssReport {
        graph: g.clone(),
        t,
        s,
        method,
        primes,
        checks: BTreeMap::new(),
    })
}

/// Whether the maximal ideal of the subring on `set` is associated to
/// `J_t(G_set)^s`. `false` when `J_t(G_set)` is the unit ideal.
fn maximal_is_associated_locally(g: &Graph, t: usize, s: u32, set: &[usize]) -> Result<bool> {
    let local = partial_cover_ideal(&g.induced_by_indices(set), t)?;
    if local.is_unit() {
        return Ok(false);
    }
    has_maximal_associated_prime(&local.power(s))
}

fn localized(
    g: &Graph,
    t: usize,
    s: u32,
    candidates: Vec<Vec<usize>>,
    exec: Execution,
) -> Result<PrimeSet> {
    let verdicts = exec.map(&candidates, |set| {
        maximal_is_associated_locally(g, t, s, set)
    });
    let mut primes = PrimeSet::new();
    for (set, keep) in candidates.into_iter().zip(verdicts) {
        if keep? {
            primes.insert(MonomialPrime::new(set));
        }
    }
    Ok(primes)
}

fn check_star(n: usize, t: usize) -> Result<()> {
    check_t(t)?;
    if n == 0 {
        return Err(Error::InvalidParameter(
            "a star needs at least one leaf".into(),
        ));
    }
    if t > n {
        return Err(Error::InvalidParameter(format!("t = {t} exceeds n = {n}")));
    }
    Ok(())
}

/// Whether `<z, x_1, ..., x_n>` is associated to `J_t(K_{1,n})^s`.
pub fn max_ideal_in_ass_star(n: usize, t: usize, s: usize) -> Result<bool> {
    check_star(n, t)?;
    check_s(s)?;
    Ok(if t == 1 { n == 1 } else { s * (t - 1) >= n - 1 })
}

fn largest_star(n: usize, t: usize, s: usize) -> usize {
    n.min(s * (t - 1) + 1)
}

/// Closed form for stars: `<z, x_{i_1}, ..., x_{i_r}>` for every r-subset
/// of the leaves with `t <= r <= min(n, s(t-1)+1)`.
pub fn predict_ass_star(n: usize, t: usize, s: usize) -> Result<AssReport> {
    check_star(n, t)?;
    check_s(s)?;
    let leaves: Vec<usize> = (1..=n).collect();
    let mut primes = PrimeSet::new();
    for r in t..=largest_star(n, t, s) {
        for_each_subset(&leaves, r, &mut |sub| {
            let mut support = vec![0];
            support.extend_from_slice(sub);
            primes.insert(MonomialPrime::new(support));
        });
    }
    Ok(AssReport {
        graph: Graph::star(n),
        t,
        s,
        method: Method::ClosedForm,
        primes,
        checks: BTreeMap::new(),
    })
}

/// Closed form for trees: the vertex sets inducing `K_{1,r}` with
/// `t <= r <= min(n, s(t-1)+1)`, `n` the number of vertices.
pub fn predict_ass_tree(g: &Graph, t: usize, s: usize) -> Result<AssReport> {
    require_tree(g)?;
    check_t(t)?;
    check_s(s)?;
    if t > g.max_degree() {
        return Err(Error::UnitCoverIdeal);
    }
    let stars = g.enumerate_induced_stars(t, largest_star(g.len(), t, s));
    Ok(AssReport {
        graph: g.clone(),
        t,
        s,
        method: Method::ClosedForm,
        primes: stars.into_iter().map(MonomialPrime::new).collect(),
        checks: BTreeMap::new(),
    })
}

fn astab_formula(delta: usize, t: usize) -> usize {
    if t == 1 {
        1
    } else {
        (delta - 1).div_ceil(t - 1).max(1)
    }
}

pub fn astab_star(n: usize, t: usize) -> Result<usize> {
    check_star(n, t)?;
    Ok(astab_formula(n, t))
}

/// `1` for `t = 1`, else the least `s` with `s(t-1) >= Δ - 1`.
pub fn astab_tree(g: &Graph, t: usize) -> Result<usize> {
    require_tree(g)?;
    check_t(t)?;
    let delta = g.max_degree();
    if t > delta {
        return Err(Error::InvalidParameter(format!(
            "t = {t} exceeds the maximal degree {delta}"
        )));
    }
    Ok(astab_formula(delta, t))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Astab {
    /// From the tree formula.
    Certified(usize),
    /// Least `s0` after which the computed sets stay constant up to `s_max`,
    /// with `s0 < s_max`. Says nothing about powers beyond `s_max`.
    Empirical(usize),
    /// The sets still change at `s_max`.
    NotDetermined,
}

impl Astab {
    pub fn value(self) -> Option<usize> {
        match self {
            Astab::Certified(k) | Astab::Empirical(k) => Some(k),
            Astab::NotDetermined => None,
        }
    }

    pub fn describe(self) -> String {
        match self {
            Astab::Certified(k) => format!("{k} (certified)"),
            Astab::Empirical(k) => format!("{k} (empirical, uncertified beyond s_max)"),
            Astab::NotDetermined => "not determined up to s_max".into(),
        }
    }
}

/// A power `s` with `Ass(I^s)` not contained in `Ass(I^{s+1})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PersistenceViolation {
    pub s: usize,
    pub lost: PrimeSet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilityReport {
    pub subject: String,
    pub ring: Ring,
    pub s_max: usize,
    /// `per_power[k]` is `Ass(I^{k+1})`.
    pub per_power: Vec<PrimeSet>,
    pub astab: Astab,
    pub empirical: Astab,
    pub persistence_ok: bool,
    pub first_violation: Option<PersistenceViolation>,
}

impl StabilityReport {
    pub fn ass(&self, s: usize) -> &PrimeSet {
        &self.per_power[s - 1]
    }

    /// For a certified value `k`: `Ass^k = Ass^{k+j}` for every explored `j`.
    pub fn certified_consistent(&self) -> bool {
        match self.astab {
            Astab::Certified(k) if k <= self.s_max => {
                self.per_power[k - 1..].iter().all(|a| a == self.ass(k))
            }
            _ => true,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "schema": SCHEMA_VERSION,
            "subject": self.subject,
            "s_max": self.s_max,
            "per_power": self
                .per_power
                .iter()
                .enumerate()
                .map(|(k, p)| json!({"s": k + 1, "primes": prime_labels(&self.ring, p)}))
                .collect::<Vec<_>>(),
            "astab": self.astab,
            "empirical_astab": self.empirical,
            "persistence_ok": self.persistence_ok,
            "first_violation": self.first_violation.as_ref().map(|v| json!({
                "s": v.s,
                "lost": prime_labels(&self.ring, &v.lost),
            })),
            "checks": {"certified_consistent": self.certified_consistent()},
        })
    }
}

fn per_power_ass(ideal: &MonomialIdeal, s_max: usize, exec: Execution) -> Result<Vec<PrimeSet>> {
    let top = check_s(s_max)?;
    ideal.ensure_proper_nonzero()?;
    let powers = ideal.powers(top);
    exec.map(&powers, |p| {
        associated_primes_with(p, Algorithm::Splitting, exec)
    })
    .into_iter()
    .collect()
}

fn empirical_from(per_power: &[PrimeSet]) -> Astab {
    let last = per_power.len();
    let s0 = (1..=last)
        .find(|&s| per_power[s - 1..].iter().all(|a| *a == per_power[last - 1]))
        .expect("the last power always qualifies");
    if s0 < last {
        Astab::Empirical(s0)
    } else {
        Astab::NotDetermined
    }
}

fn persistence_from(per_power: &[PrimeSet]) -> Option<PersistenceViolation> {
    per_power.windows(2).enumerate().find_map(|(k, w)| {
        let lost: PrimeSet = w[0].difference(&w[1]).cloned().collect();
        (!lost.is_empty()).then_some(PersistenceViolation { s: k + 1, lost })
    })
}

fn stability_from(
    subject: String,
    ring: Ring,
    per_power: Vec<PrimeSet>,
    certified: Option<usize>,
) -> StabilityReport {
    let empirical = empirical_from(&per_power);
    let first_violation = persistence_from(&per_power);
    StabilityReport {
        subject,
        ring,
        s_max: per_power.len(),
        astab: certified.map_or(empirical, Astab::Certified),
        empirical,
        persistence_ok: first_violation.is_none(),
        first_violation,
        per_power,
    }
}

/// `Ass(I^s)` for `s = 1..=s_max` and the least power after which they stay
/// constant. Never certified.
pub fn empirical_astab(ideal: &MonomialIdeal, s_max: usize) -> Result<StabilityReport> {
    empirical_astab_with(ideal, s_max, Execution::default())
}

pub fn empirical_astab_with(
    ideal: &MonomialIdeal,
    s_max: usize,
    exec: Execution,
) -> Result<StabilityReport> {
    let per_power = per_power_ass(ideal, s_max, exec)?;
    Ok(stability_from(
        ideal.display_generators(),
        ideal.ring().clone(),
        per_power,
        None,
    ))
}

/// Checks `Ass(I^s) ⊆ Ass(I^{s+1})` for `s < s_max`.
pub fn check_persistence(ideal: &MonomialIdeal, s_max: usize) -> Result<StabilityReport> {
    if s_max < 2 {
        return Err(Error::InvalidParameter(
            "persistence needs at least two powers (s_max >= 2)".into(),
        ));
    }
    empirical_astab(ideal, s_max)
}

/// Stability of `J_t(G)`. Trees get the formula value as a certified index;
/// other graphs only the empirical one.
pub fn graph_stability(
    g: &Graph,
    t: usize,
    s_max: usize,
    exec: Execution,
) -> Result<StabilityReport> {
    let j = proper_cover_ideal(g, t)?;
    let per_power = per_power_ass(&j, s_max, exec)?;
    let certified = if g.is_tree()? {
        Some(astab_tree(g, t)?)
    } else {
        None
    };
    Ok(stability_from(
        format!("J_{t}({})", g.vertices().join(",")),
        g.ring(),
        per_power,
        certified,
    ))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessCertificate {
    pub n: usize,
    pub t: usize,
    pub s: usize,
    pub s0: usize,
    pub e: usize,
    /// Number of cyclic-word letters in the witness.
    pub word_len: usize,
    pub witness: Monomial,
    pub ring: Ring,
    /// `T` is not in `J_t^s`.
    pub not_in_power: bool,
    /// `J_t^s : T` is `<z, x_1, ..., x_n>`.
    pub colon_is_maximal: bool,
    /// `T` divides `z^e (x_1 ... x_n)^{s-e-1}`.
    pub annihilator_divides: bool,
    /// The word is empty and `T` is a power of `z` (or 1).
    pub empty_word: bool,
}

impl WitnessCertificate {
    pub fn is_valid(&self) -> bool {
        self.not_in_power && self.colon_is_maximal
    }

    pub fn prime(&self) -> MonomialPrime {
        self.ring.maximal_prime()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "schema": SCHEMA_VERSION,
            "n": self.n,
            "t": self.t,
            "s": self.s,
            "s0": self.s0,
            "e": self.e,
            "word_len": self.word_len,
            "witness": self.witness.display(&self.ring).to_string(),
            "prime": self.prime().labels(&self.ring),
            "empty_word": self.empty_word,
            "checks": {
                "not_in_power": self.not_in_power,
                "colon_is_maximal": self.colon_is_maximal,
                "annihilator_divides": self.annihilator_divides,
            },
        })
    }
}

/// Least `σ >= 1` with `σ(t-1) >= n-1`.
fn star_s0(n: usize, t: usize) -> usize {
    (n - 1).div_ceil(t - 1).max(1)
}

fn check_witness_params(n: usize, t: usize, s: usize) -> Result<()> {
    check_star(n, t)?;
    check_s(s)?;
    if t < 2 {
        return Err(Error::InvalidParameter(
            "the witness construction needs t >= 2".into(),
        ));
    }
    if s * (t - 1) < n - 1 {
        return Err(Error::CriterionUnmet { n, t, s });
    }
    Ok(())
}

/// The witness for `<z, x_1, ..., x_n>` in `Ass(J_t(K_{1,n})^s)`:
/// `z^e` times the first `s0(n-t+1)-1` letters of `x_1 x_2 ... x_n x_1 ...`,
/// where `s0` is the least power with `s0(t-1) >= n-1` and `e = s - s0`.
/// Both defining properties are then checked against the oracle.
pub fn build_star_witness(n: usize, t: usize, s: usize) -> Result<WitnessCertificate> {
    check_witness_params(n, t, s)?;
    let s0 = star_s0(n, t);
    let e = s - s0;
    let word_len = s0 * (n - t + 1) - 1;
    let mut exps = vec![0u32; n + 1];
    exps[0] = e as u32;
    for k in 0..word_len {
        exps[1 + k % n] += 1;
    }
    let witness = Monomial::new(exps);
    let j = star_generators(n, t)?.power(s as u32);
    let not_in_power = !j.contains(&witness);
    let colon_is_maximal = j.colon(&witness)?.equals_prime(&j.ring().maximal_prime());
    Ok(WitnessCertificate {
        n,
        t,
        s,
        s0,
        e,
        word_len,
        annihilator_divides: annihilator_divides(n, s, &witness),
        ring: j.ring().clone(),
        witness,
        not_in_power,
        colon_is_maximal,
        empty_word: word_len == 0,
    })
}

/// With `T = z^e T'`, whether `T | z^e (x_1 ... x_n)^{s-e-1}`.
fn annihilator_divides(n: usize, s: usize, t: &Monomial) -> bool {
    let e = t.exp(0) as usize;
    if e + 1 > s {
        return false;
    }
    let cap = (s - e - 1) as u32;
    (1..=n).all(|i| t.exp(i) <= cap)
}

/// The divisibility bound on witnesses of the maximal ideal of a star power.
/// `witness` lives over `z, x_1, ..., x_n` and must actually be such a
/// witness.
pub fn verify_annihilator_divisibility(
    n: usize,
    t: usize,
    s: usize,
    witness: &Monomial,
) -> Result<bool> {
    check_star(n, t)?;
    check_s(s)?;
    let j = star_generators(n, t)?.power(s as u32);
    if witness.nvars() != n + 1 {
        return Err(Error::ArityMismatch {
            expected: n + 1,
            found: witness.nvars(),
        });
    }
    if j.contains(witness) || !j.colon(witness)?.equals_prime(&j.ring().maximal_prime()) {
        return Err(Error::InvalidParameter(format!(
            "{} is not a witness of the maximal ideal for J_{t}(K_1,{n})^{s}",
            witness.display(j.ring())
        )));
    }
    Ok(annihilator_divides(n, s, witness))
}

/// The combinatorial localization statement for one vertex set: `P` is in
/// `Ass(J_t(G)^s)` iff the maximal ideal of the subring on `P` is associated
/// to `J_t(G_P)^s`.
pub fn localization_check(g: &Graph, t: usize, s: usize, set: &[usize]) -> Result<bool> {
    let report = ass_of_power(g, t, s, AssMode::Direct)?;
    localization_check_against(&report, set)
}

/// As [`localization_check`], reusing a direct report for the left side.
pub fn localization_check_against(report: &AssReport, set: &[usize]) -> Result<bool> {
    let mut set = set.to_vec();
    set.sort_unstable();
    set.dedup();
    if set.iter().any(|&i| i >= report.graph.len()) {
        return Err(Error::InvalidParameter("vertex index out of range".into()));
    }
    let global = report.contains_vertex_set(&set);
    let local = !set.is_empty()
        && maximal_is_associated_locally(&report.graph, report.t, check_s(report.s)?, &set)?;
    Ok(global == local)
}

/// Every prime's support induces a connected subgraph.
pub fn connectivity_check(report: &AssReport, g: &Graph) -> bool {
    report
        .primes
        .iter()
        .all(|p| p.support().iter().all(|&i| i < g.len()) && g.is_connected_set(p.support()))
}
