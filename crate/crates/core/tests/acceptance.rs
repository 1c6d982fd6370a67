//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use covertool_core::algebra::MonomialPrime;
use covertool_core::analysis::{
    ass_of_power, ass_of_power_with, build_star_witness, connectivity_check,
    localization_check_against, max_ideal_in_ass_star, predict_ass_star, AssMode, Astab,
};
use covertool_core::corpus::{cyclic_corpus, graph_corpus, tree_corpus};
use covertool_core::cover::{
    partial_cover_ideal, partial_cover_ideal_from_covers, star_generators,
};
use covertool_core::graph::Graph;
use covertool_core::hypergraph::{build_gap_family, verify_gap};
use covertool_core::sweep::{sweep, valid_ts, SweepOptions};
use covertool_core::Execution;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

type Check = Result<(), String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Check + 'a>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

/// `{<z, S> : S a leaf set, t <= |S| <= min(n, s(t-1)+1)}`, built from scratch.
fn expected_star_primes(n: usize, t: usize, s: usize) -> BTreeSet<MonomialPrime> {
    let leaves: Vec<usize> = (1..=n).collect();
    let top = n.min(s * (t - 1) + 1);
    (t..=top)
        .flat_map(|r| common::subsets(&leaves, r))
        .map(|mut sub| {
            sub.insert(0, 0);
            MonomialPrime::new(sub)
        })
        .collect()
}

/// Vertex sets inducing `K_{1,r}` with `t <= r <= min(|V|, s(t-1)+1)`, by
/// brute force over all subsets.
fn expected_tree_primes(g: &Graph, t: usize, s: usize) -> BTreeSet<MonomialPrime> {
    let top = g.len().min(s * (t - 1) + 1);
    common::nonempty_subsets(g.len())
        .into_iter()
        .filter(|set| {
            let r = set.len() - 1;
            t <= r && r <= top && common::is_induced_star(g, set)
        })
        .map(MonomialPrime::new)
        .collect()
}

fn expected_astab(delta: usize, t: usize) -> usize {
    if t == 1 {
        1
    } else {
        (delta - 1).div_ceil(t - 1)
    }
}

fn star_grid() -> impl Iterator<Item = (usize, usize, usize)> {
    (1..=5).flat_map(|n| (1..=n).flat_map(move |t| (1..=4).map(move |s| (n, t, s))))
}

fn star_closed_form() -> Check {
    for (n, t, s) in star_grid() {
        let oracle = ass_of_power(&Graph::star(n), t, s, AssMode::Direct).map_err(err)?;
        let expected = expected_star_primes(n, t, s);
        let predicted = predict_ass_star(n, t, s).map_err(err)?;
        ensure(oracle.primes == expected, || {
            format!("oracle differs at n={n} t={t} s={s}")
        })?;
        ensure(predicted.primes == expected, || {
            format!("prediction differs at n={n} t={t} s={s}")
        })?;
    }
    Ok(())
}

fn max_ideal_criterion() -> Check {
    for (n, t, s) in star_grid() {
        let g = Graph::star(n);
        let oracle = ass_of_power(&g, t, s, AssMode::Direct).map_err(err)?;
        let present = oracle.primes.contains(&g.ring().maximal_prime());
        let inequality = s * (t - 1) >= n - 1;
        ensure(present == inequality, || {
            format!("n={n} t={t} s={s}: oracle {present}")
        })?;
        ensure(
            max_ideal_in_ass_star(n, t, s).map_err(err)? == inequality,
            || format!("predicate disagrees at n={n} t={t} s={s}"),
        )?;
    }
    Ok(())
}

fn tree_closed_form(groups: &[covertool_core::sweep::SweepGroup]) -> Check {
    for grp in groups {
        let (g, t) = (&grp.graph, grp.t);
        ensure(
            grp.stability.s_max == expected_astab(g.max_degree(), t) + 1 || t == 1,
            || {
                format!(
                    "{} t={t}: explored only up to s={}",
                    grp.name, grp.stability.s_max
                )
            },
        )?;
        for s in 1..=grp.stability.s_max {
            let expected = expected_tree_primes(g, t, s);
            ensure(*grp.stability.ass(s) == expected, || {
                format!("{} t={t} s={s}: oracle", grp.name)
            })?;
        }
        ensure(grp.prediction_mismatches().is_empty(), || {
            format!(
                "{} t={t}: closed form at s={:?}",
                grp.name,
                grp.prediction_mismatches()
            )
        })?;
    }
    Ok(())
}

fn astab_and_persistence(groups: &[covertool_core::sweep::SweepGroup]) -> Check {
    for grp in groups {
        let want = expected_astab(grp.graph.max_degree(), grp.t);
        let st = &grp.stability;
        ensure(st.empirical == Astab::Empirical(want), || {
            format!(
                "{} t={}: empirical {:?}, expected {want}",
                grp.name, grp.t, st.empirical
            )
        })?;
        ensure(st.astab == Astab::Certified(want), || {
            format!("{} t={}: certified value", grp.name, grp.t)
        })?;
        for s in 1..st.s_max {
            ensure(st.ass(s).is_subset(st.ass(s + 1)), || {
                format!("{} t={}: persistence fails at s={s}", grp.name, grp.t)
            })?;
        }
        ensure(st.persistence_ok, || {
            format!("{} t={}: persistence flag", grp.name, grp.t)
        })?;
    }
    Ok(())
}

fn generator_duality() -> Check {
    let corpora = tree_corpus()
        .into_iter()
        .chain(graph_corpus())
        .chain(cyclic_corpus());
    let mut saw = BTreeSet::new();
    for named in corpora {
        for t in valid_ts(&named.value) {
            let a = partial_cover_ideal(&named.value, t).map_err(err)?;
            let b = partial_cover_ideal_from_covers(&named.value, t).map_err(err)?;
            ensure(a == b, || format!("{} t={t}", named.name))?;
        }
        saw.insert(named.name);
    }
    ensure(saw.contains("C_4") && saw.contains("C_5"), || {
        "cycles missing from corpus".into()
    })
}

fn star_generator_formula() -> Check {
    for n in 1..=6 {
        for t in 1..=n {
            let closed = star_generators(n, t).map_err(err)?;
            let built = partial_cover_ideal(&Graph::star(n), t).map_err(err)?;
            ensure(closed == built, || format!("n={n} t={t}"))?;
            let want = 1 + common::binomial(n, n - t + 1);
            ensure(closed.len() == want, || {
                format!("n={n} t={t}: {} generators, want {want}", closed.len())
            })?;
        }
    }
    Ok(())
}

fn witness_construction() -> Check {
    for n in 2..=5 {
        for t in 2..=n {
            let s0 = (n - 1usize).div_ceil(t - 1).max(1);
            for s in s0..=s0 + 2 {
                let cert = build_star_witness(n, t, s).map_err(err)?;
                ensure(cert.s0 == s0, || format!("n={n} t={t}: s0 {}", cert.s0))?;
                // Independent check of both properties.
                let j = star_generators(n, t).map_err(err)?.power(s as u32);
                let outside = !j.contains(&cert.witness);
                let colon = j.colon(&cert.witness).map_err(err)?;
                let maximal = colon.equals_prime(&j.ring().maximal_prime());
                ensure(outside && maximal && cert.is_valid(), || {
                    format!("n={n} t={t} s={s}: T not in power {outside}, colon maximal {maximal}")
                })?;
            }
        }
    }
    Ok(())
}

fn complete_intersection() -> Check {
    for n in 1..=5 {
        let expected: BTreeSet<MonomialPrime> =
            (1..=n).map(|i| MonomialPrime::new(vec![0, i])).collect();
        for s in 1..=3 {
            let oracle = ass_of_power(&Graph::star(n), 1, s, AssMode::Direct).map_err(err)?;
            ensure(oracle.primes == expected, || format!("n={n} s={s}"))?;
        }
    }
    Ok(())
}

fn hypergraph_gap() -> Check {
    for m in 1..=3 {
        let h = build_gap_family(m).map_err(err)?;
        // Edges have three vertices, so one colour fails; z alone in its
        // colour class meets every edge in both colours.
        ensure(
            h.edges().iter().all(|e| e.len() == 3 && e.contains(&0)),
            || format!("H_{m} edges"),
        )?;
        let report = verify_gap(m, None, false, Execution::default()).map_err(err)?;
        ensure(report.chromatic == 2, || {
            format!("H_{m}: chi = {}", report.chromatic)
        })?;
        ensure(report.oracle.empirical == Astab::Empirical(m + 1), || {
            format!("H_{m}: oracle astab {:?}", report.oracle.empirical)
        })?;
        ensure(
            report.astab == m + 1 && report.gap_is_tight() && report.all_hold(),
            || {
                format!(
                    "H_{m}: astab {}, gap {}",
                    report.astab,
                    report.gap_is_tight()
                )
            },
        )?;
        ensure(report.chromatic - 1 + m == m + 1, || {
            format!("H_{m}: inequality not an equality")
        })?;
    }
    Ok(())
}

fn property_suites() -> Check {
    use proptest::strategy::Strategy;
    let config = Config {
        cases: 1000,
        failure_persistence: None,
        ..Config::default()
    };
    let mut runner =
        TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha));
    let strategy = (
        common::ideal(common::NVARS, 3, 5),
        common::ideal(common::NVARS, 3, 5),
        common::monomial(common::NVARS, 4),
        common::monomial(common::NVARS, 3),
    )
        .boxed();
    runner
        .run(&strategy, |(i, j, m, t)| {
            common::check_membership_laws(&i, &j, &m, &t)?;
            common::check_decomposition(&i)
        })
        .map_err(err)?;

    let corpus = tree_corpus()
        .into_iter()
        .chain(graph_corpus())
        .collect::<Vec<_>>();
    for named in &corpus {
        let g = &named.value;
        for t in valid_ts(g) {
            for s in 1..=3 {
                let report = ass_of_power_with(g, t, s, AssMode::Direct, Execution::default())
                    .map_err(err)?;
                ensure(connectivity_check(&report, g), || {
                    format!("{} t={t} s={s}: connectivity", named.name)
                })?;
                for set in common::nonempty_subsets(g.len()) {
                    ensure(
                        localization_check_against(&report, &set).map_err(err)?,
                        || {
                            format!(
                                "{} t={t} s={s}: localization at {:?}",
                                named.name,
                                g.labels(&set)
                            )
                        },
                    )?;
                }
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let started = Instant::now();
    let groups = sweep(
        &tree_corpus(),
        SweepOptions::default(),
        Execution::default(),
    );
    let criteria: Vec<Criterion> = vec![
        ("star closed form", Box::new(star_closed_form)),
        ("maximal ideal criterion", Box::new(max_ideal_criterion)),
        (
            "tree closed form",
            Box::new(|| tree_closed_form(groups.as_ref().map_err(err)?)),
        ),
        (
            "astab and persistence",
            Box::new(|| astab_and_persistence(groups.as_ref().map_err(err)?)),
        ),
        ("generator duality", Box::new(generator_duality)),
        ("star generators", Box::new(star_generator_formula)),
        ("witness construction", Box::new(witness_construction)),
        ("complete intersection", Box::new(complete_intersection)),
        ("hypergraph gap", Box::new(hypergraph_gap)),
        ("property suites", Box::new(property_suites)),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let t0 = Instant::now();
        let result = check();
        let ms = t0.elapsed().as_millis();
        match result {
            Ok(()) => println!("criterion {:>2} {name}: PASS ({ms} ms)", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} {name}: FAIL ({why})", k + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} passed in {:.1} s",
        criteria.len() - failed,
        criteria.len(),
        started.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
