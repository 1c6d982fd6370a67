//! Corpus sweeps: for each graph and each valid `t`, the oracle sets
//! `Ass(J_t^s)` for a range of powers, checked against the closed forms
//! (trees only), the localized computation, and connectivity.

use serde_json::{json, Value};

use crate::analysis::{
    ass_of_power_with, astab_tree, connectivity_check, graph_stability, predict_ass_tree,
    prime_labels, AssMode, AssReport, Astab, PrimeSet, StabilityReport, SCHEMA_VERSION,
};
use crate::corpus::Named;
use crate::error::Result;
use crate::exec::Execution;
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SweepOptions {
    /// Largest power; `None` means `astab + 1` on trees (at least 3 when
    /// `t = 1`) and 3 otherwise.
    pub s_max: Option<usize>,
    pub localized: bool,
    /// Restrict to a single `t`.
    pub only_t: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepGroup {
    pub name: String,
    pub graph: Graph,
    pub t: usize,
    pub stability: StabilityReport,
    /// Closed-form sets per power, trees only.
    pub predicted: Option<Vec<PrimeSet>>,
    /// Localized-mode sets per power, when requested.
    pub localized: Option<Vec<PrimeSet>>,
    pub connected: bool,
}

impl SweepGroup {
    pub fn is_tree(&self) -> bool {
        self.predicted.is_some()
    }

    /// Powers (1-based) at which the oracle and the closed form differ.
    pub fn prediction_mismatches(&self) -> Vec<usize> {
        mismatches(&self.stability.per_power, self.predicted.as_deref())
    }

    pub fn localized_mismatches(&self) -> Vec<usize> {
        mismatches(&self.stability.per_power, self.localized.as_deref())
    }

    /// For trees, whether the empirical index equals the formula value.
    pub fn astab_agrees(&self) -> bool {
        match self.stability.astab {
            Astab::Certified(k) => self.stability.empirical == Astab::Empirical(k),
            _ => true,
        }
    }

    pub fn ok(&self) -> bool {
        self.prediction_mismatches().is_empty()
            && self.localized_mismatches().is_empty()
            && self.stability.persistence_ok
            && self.astab_agrees()
            && self.connected
    }

    pub fn to_json(&self) -> Value {
        let ring = self.graph.ring();
        let per_power: Vec<Value> = self
            .stability
            .per_power
            .iter()
            .enumerate()
            .map(|(k, primes)| {
                let mut cell = json!({"s": k + 1, "primes": prime_labels(&ring, primes)});
                if let Some(p) = &self.predicted {
                    cell["matches_prediction"] = json!(p[k] == *primes);
                }
                if let Some(l) = &self.localized {
                    cell["matches_localized"] = json!(l[k] == *primes);
                }
                cell
            })
            .collect();
        json!({
            "graph": self.name,
            "t": self.t,
            "tree": self.is_tree(),
            "per_power": per_power,
            "astab": self.stability.astab,
            "empirical_astab": self.stability.empirical,
            "checks": {
                "persistence": self.stability.persistence_ok,
                "astab_agrees": self.astab_agrees(),
                "connected": self.connected,
                "ok": self.ok(),
            },
        })
    }
}

fn mismatches(oracle: &[PrimeSet], other: Option<&[PrimeSet]>) -> Vec<usize> {
    match other {
        Some(other) => oracle
            .iter()
            .zip(other)
            .enumerate()
            .filter(|(_, (a, b))| a != b)
            .map(|(k, _)| k + 1)
            .collect(),
        None => Vec::new(),
    }
}

/// The `t` values with `J_t(G)` proper, i.e. `1..=Δ(G)`.
pub fn valid_ts(g: &Graph) -> Vec<usize> {
    (1..=g.max_degree()).collect()
}

fn default_s_max(g: &Graph, t: usize, tree: bool) -> Result<usize> {
    Ok(if tree {
        let bound = astab_tree(g, t)? + 1;
        if t == 1 {
            bound.max(3)
        } else {
            bound
        }
    } else {
        3
    })
}

fn run_group(name: &str, g: &Graph, t: usize, opts: SweepOptions) -> Result<SweepGroup> {
    let inner = Execution::Sequential;
    let tree = !g.is_empty() && g.is_tree()?;
    let s_max = match opts.s_max {
        Some(s) => s,
        None => default_s_max(g, t, tree)?,
    };
    let stability = graph_stability(g, t, s_max, inner)?;
    let predicted = if tree {
        Some(
            (1..=s_max)
                .map(|s| predict_ass_tree(g, t, s).map(|r| r.primes))
                .collect::<Result<Vec<_>>>()?,
        )
    } else {
        None
    };
    let localized = if opts.localized {
        Some(
            (1..=s_max)
                .map(|s| ass_of_power_with(g, t, s, AssMode::Localized, inner).map(|r| r.primes))
                .collect::<Result<Vec<_>>>()?,
        )
    } else {
        None
    };
    let connected = stability
        .per_power
        .iter()
        .all(|primes| primes.iter().all(|p| g.is_connected_set(p.support())));
    Ok(SweepGroup {
        name: name.to_string(),
        graph: g.clone(),
        t,
        stability,
        predicted,
        localized,
        connected,
    })
}

/// Runs every `(graph, t)` group. Groups are independent and evaluated with
/// `exec`; the result order follows the input order.
pub fn sweep(
    graphs: &[Named<Graph>],
    opts: SweepOptions,
    exec: Execution,
) -> Result<Vec<SweepGroup>> {
    let jobs: Vec<(usize, usize)> = graphs
        .iter()
        .enumerate()
        .flat_map(|(i, g)| valid_ts(&g.value).into_iter().map(move |t| (i, t)))
        .filter(|&(_, t)| opts.only_t.is_none_or(|only| only == t))
        .collect();
    exec.map(&jobs, |&(i, t)| {
        run_group(&graphs[i].name, &graphs[i].value, t, opts)
    })
    .into_iter()
    .collect()
}

pub fn sweep_json(groups: &[SweepGroup]) -> Value {
    json!({
        "schema": SCHEMA_VERSION,
        "groups": groups.iter().map(SweepGroup::to_json).collect::<Vec<_>>(),
        "ok": groups.iter().all(SweepGroup::ok),
    })
}

/// The oracle report for one cell, with the connectivity check recorded.
pub fn checked_cell(g: &Graph, t: usize, s: usize, exec: Execution) -> Result<AssReport> {
    let mut r = ass_of_power_with(g, t, s, AssMode::Direct, exec)?;
    let connected = connectivity_check(&r, g);
    r.checks.insert("connected".into(), connected);
    Ok(r)
}
