//! Irreducible decomposition of monomial ideals and the associated-prime
//! oracle built on it.
//!
//! Every monomial ideal is an irredundant intersection of irreducible ideals
//! `<x_i^{e_i} : i in S>`; the supports `S` of the components are exactly the
//! associated primes. Two independent algorithms are provided:
//!
//! * [`Algorithm::Splitting`] recursively splits a non-pure generator
//!   `m = x_i^a * v` into the branches `I + <x_i^a>` and `I + <v>`.
//! * [`Algorithm::Incremental`] adds generators one at a time to a running
//!   decomposition, using distributivity of the monomial ideal lattice.
//!
//! The associated-prime oracle uses the splitting algorithm; the localized
//! computation path uses the incremental one so the two routes can be
//! compared against each other.

use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, Mutex};

use super::ideal::MonomialIdeal;
use super::monomial::{Monomial, MonomialPrime, Ring};
use crate::error::{Error, Result};
use crate::exec::Execution;

/// Below this many generators the splitting recursion stays on one thread.
const PARALLEL_SPLIT_THRESHOLD: usize = 24;

/// The irreducible ideal `<x_i^{e_i} : e_i > 0>`; a zero bound means the
/// variable does not occur.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IrreducibleComponent {
    bounds: Vec<u32>,
}

impl IrreducibleComponent {
    pub fn new(bounds: Vec<u32>) -> Self {
        IrreducibleComponent { bounds }
    }

    pub fn bounds(&self) -> &[u32] {
        &self.bounds
    }

    pub fn support(&self) -> MonomialPrime {
        MonomialPrime::new(
            self.bounds
                .iter()
                .enumerate()
                .filter(|(_, &b)| b > 0)
                .map(|(i, _)| i)
                .collect(),
        )
    }

    pub fn contains_monomial(&self, m: &Monomial) -> bool {
        self.bounds
            .iter()
            .zip(m.exponents())
            .any(|(&b, &e)| b > 0 && e >= b)
    }

    /// `self ⊇ other` as ideals.
    pub fn contains_component(&self, other: &IrreducibleComponent) -> bool {
        other
            .bounds
            .iter()
            .zip(&self.bounds)
            .all(|(&o, &s)| o == 0 || (s > 0 && s <= o))
    }

    pub fn to_ideal(&self, ring: &Ring) -> MonomialIdeal {
        let n = ring.nvars();
        let gens = self
            .bounds
            .iter()
            .enumerate()
            .filter(|(_, &b)| b > 0)
            .map(|(i, &b)| Monomial::var(n, i).pow(b))
            .collect();
        MonomialIdeal::from_gens(ring.clone(), gens)
    }

    pub fn display(&self, ring: &Ring) -> String {
        self.to_ideal(ring).to_string()
    }

    fn tightened(&self, i: usize, b: u32) -> IrreducibleComponent {
        let mut bounds = self.bounds.clone();
        bounds[i] = if bounds[i] == 0 { b } else { bounds[i].min(b) };
        IrreducibleComponent { bounds }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Algorithm {
    #[default]
    Splitting,
    Incremental,
}

/// Merges two irredundant lists into an irredundant, sorted list. Only
/// cross pairs need checking.
fn merge_irredundant(
    left: &[IrreducibleComponent],
    right: &[IrreducibleComponent],
) -> Vec<IrreducibleComponent> {
    let keep_left: Vec<bool> = left
        .iter()
        .map(|c| !right.iter().any(|d| c != d && c.contains_component(d)))
        .collect();
    let keep_right: Vec<bool> = right
        .iter()
        .map(|c| !left.iter().any(|d| c.contains_component(d)))
        .collect();
    let mut out: Vec<IrreducibleComponent> = left
        .iter()
        .zip(keep_left)
        .chain(right.iter().zip(keep_right))
        .filter(|&(_, k)| k)
        .map(|(c, _)| c.clone())
        .collect();
    out.sort_unstable();
    out
}

type Memo = Mutex<HashMap<Vec<Monomial>, Arc<Vec<IrreducibleComponent>>>>;

fn split(ideal: &MonomialIdeal, exec: Execution, memo: &Memo) -> Arc<Vec<IrreducibleComponent>> {
    if let Some(hit) = memo.lock().expect("memo lock").get(ideal.generators()) {
        return Arc::clone(hit);
    }
    let Some(m) = ideal
        .generators()
        .iter()
        .find(|g| g.pure_power_var().is_none())
    else {
        let mut bounds = vec![0; ideal.nvars()];
        for g in ideal.generators() {
            let i = g.pure_power_var().expect("pure power");
            bounds[i] = g.exp(i);
        }
        return Arc::new(vec![IrreducibleComponent { bounds }]);
    };
    let i = m.support().next().expect("non-pure generator has support");
    let power = Monomial::var(m.nvars(), i).pow(m.exp(i));
    let rest = m.clone().with_exp(i, 0);
    let left = ideal.with_generator(power);
    let right = ideal.with_generator(rest);
    let exec = if ideal.len() >= PARALLEL_SPLIT_THRESHOLD {
        exec
    } else {
        Execution::Sequential
    };
    let (l, r) = exec.join(|| split(&left, exec, memo), || split(&right, exec, memo));
    let merged = Arc::new(merge_irredundant(&l, &r));
    memo.lock()
        .expect("memo lock")
        .insert(ideal.generators().to_vec(), Arc::clone(&merged));
    merged
}

fn incremental(ideal: &MonomialIdeal) -> Vec<IrreducibleComponent> {
    let n = ideal.nvars();
    let mut gens = ideal.generators().iter();
    let first = gens.next().expect("nonzero ideal");
    let mut comps: Vec<IrreducibleComponent> = first
        .support()
        .map(|i| IrreducibleComponent::new(vec![0; n]).tightened(i, first.exp(i)))
        .collect();
    for g in gens {
        let (keep, change): (Vec<_>, Vec<_>) =
            comps.into_iter().partition(|c| c.contains_monomial(g));
        let mut fresh: Vec<IrreducibleComponent> = change
            .iter()
            .flat_map(|c| g.support().map(move |i| c.tightened(i, g.exp(i))))
            .collect();
        fresh.sort_unstable();
        fresh.dedup();
        // Components that already contained g stay irredundant; only the new
        // ones can contain something else.
        let survivors: Vec<IrreducibleComponent> = fresh
            .iter()
            .filter(|c| {
                !keep.iter().any(|d| c.contains_component(d))
                    && !fresh.iter().any(|d| d != *c && c.contains_component(d))
            })
            .cloned()
            .collect();
        comps = keep;
        comps.extend(survivors);
    }
    comps.sort_unstable();
    comps
}

/// Irredundant irreducible decomposition by recursive splitting.
pub fn irreducible_decomposition(ideal: &MonomialIdeal) -> Result<Vec<IrreducibleComponent>> {
    decompose_with(ideal, Algorithm::Splitting, Execution::default())
}

pub fn decompose_with(
    ideal: &MonomialIdeal,
    algorithm: Algorithm,
    exec: Execution,
) -> Result<Vec<IrreducibleComponent>> {
    ideal.ensure_proper_nonzero()?;
    Ok(match algorithm {
        Algorithm::Splitting => {
            let memo = Memo::default();
            let comps = split(ideal, exec, &memo);
            drop(memo);
            Arc::try_unwrap(comps).unwrap_or_else(|shared| (*shared).clone())
        }
        Algorithm::Incremental => incremental(ideal),
    })
}

/// `Ass(I)`: the supports of the irredundant irreducible components.
pub fn associated_primes(ideal: &MonomialIdeal) -> Result<BTreeSet<MonomialPrime>> {
    associated_primes_with(ideal, Algorithm::Splitting, Execution::default())
}

pub fn associated_primes_with(
    ideal: &MonomialIdeal,
    algorithm: Algorithm,
    exec: Execution,
) -> Result<BTreeSet<MonomialPrime>> {
    Ok(decompose_with(ideal, algorithm, exec)?
        .iter()
        .map(IrreducibleComponent::support)
        .collect())
}

/// Whether the ideal generated by all variables is associated to `ideal`,
/// decided from the incremental decomposition.
pub fn has_maximal_associated_prime(ideal: &MonomialIdeal) -> Result<bool> {
    let n = ideal.nvars();
    Ok(
        decompose_with(ideal, Algorithm::Incremental, Execution::Sequential)?
            .iter()
            .any(|c| c.bounds().iter().filter(|&&b| b > 0).count() == n),
    )
}

/// Searches for a monomial `T` with `I : <T> = P`.
///
/// `I : <T>` only depends on `min(T_i, max_i)` where `max_i` is the largest
/// exponent of `x_i` among the minimal generators, so enumerating the box
/// `0 <= T_i <= max_i` is equivalent to enumerating the larger box
/// `0 <= T_i <= max_i * |G(I)|`, and to the unbounded search. Returns the
/// first witness in mixed-radix order (first variable fastest).
pub fn witness_search(ideal: &MonomialIdeal, prime: &MonomialPrime) -> Result<Option<Monomial>> {
    let mut found = None;
    walk_witness_box(ideal, prime, &mut |t| {
        found = Some(t);
        false
    })?;
    Ok(found)
}

/// Every witness `T` of `prime` in the box `0 <= T_i <= max_i`, in the same
/// order as [`witness_search`]. Any witness outside the box agrees with one
/// inside it after clipping each exponent to `max_i`.
pub fn enumerate_witnesses(ideal: &MonomialIdeal, prime: &MonomialPrime) -> Result<Vec<Monomial>> {
    let mut out = Vec::new();
    walk_witness_box(ideal, prime, &mut |t| {
        out.push(t);
        true
    })?;
    Ok(out)
}

/// Calls `visit` on each witness; stops early when it returns `false`.
fn walk_witness_box(
    ideal: &MonomialIdeal,
    prime: &MonomialPrime,
    visit: &mut dyn FnMut(Monomial) -> bool,
) -> Result<()> {
    ideal.ensure_proper_nonzero()?;
    let n = ideal.nvars();
    if prime.is_empty() || prime.support().iter().any(|&i| i >= n) {
        return Err(Error::InvalidParameter(
            "prime must be a nonempty set of ring variables".into(),
        ));
    }
    let limits = ideal.max_exponents();
    let mut exps = vec![0u32; n];
    loop {
        let annihilated = prime.support().iter().all(|&i| {
            let mut e = exps.clone();
            e[i] += 1;
            ideal.contains(&Monomial::new(e))
        });
        if annihilated {
            let t = Monomial::new(exps.clone());
            if !ideal.contains(&t) && ideal.colon(&t)?.equals_prime(prime) && !visit(t) {
                return Ok(());
            }
        }
        // advance the odometer
        let mut k = 0;
        loop {
            if k == n {
                return Ok(());
            }
            if exps[k] < limits[k] {
                exps[k] += 1;
                break;
            }
            exps[k] = 0;
            k += 1;
        }
    }
}

/// Alexander dual of a square-free ideal: the intersection of the primes
/// generated by the supports of its generators. Its generators are the
/// monomials of the minimal transversals of those supports.
pub fn alexander_dual(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    if !ideal.is_square_free() {
        return Err(Error::NotSquareFree);
    }
    let ring = ideal.ring().clone();
    let mut acc = MonomialIdeal::unit(ring.clone());
    for g in ideal.generators() {
        let prime = MonomialPrime::new(g.support().collect());
        acc = acc.intersection(&MonomialIdeal::from_prime(ring.clone(), &prime))?;
    }
    Ok(acc)
}

/// Intersection of a list of components, as an ideal.
pub fn intersect_components(ring: &Ring, comps: &[IrreducibleComponent]) -> MonomialIdeal {
    comps
        .iter()
        .fold(MonomialIdeal::unit(ring.clone()), |acc, c| {
            acc.intersection(&c.to_ideal(ring)).expect("same ring")
        })
}
