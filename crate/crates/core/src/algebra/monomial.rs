use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// An ordered list of variable names. The order is the variable order of
/// every monomial and ideal built over the ring.
#[derive(Clone, Debug, Eq)]
pub struct Ring {
    names: Arc<[String]>,
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.names, &other.names) || self.names == other.names
    }
}

impl Ring {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Self {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        Ring {
            names: names.into(),
        }
    }

    /// `x1, ..., xn`.
    pub fn indexed(prefix: &str, n: usize) -> Self {
        Ring::new((1..=n).map(|i| format!("{prefix}{i}")))
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// The subring on the given variable indices, in ring order.
    pub fn restrict(&self, support: &[usize]) -> Ring {
        Ring::new(support.iter().map(|&i| self.names[i].clone()))
    }

    pub fn maximal_prime(&self) -> MonomialPrime {
        MonomialPrime::new((0..self.nvars()).collect())
    }
}

/// A monomial as a dense exponent vector over a fixed variable order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    /// The square-free monomial `x_W`.
    pub fn from_support(nvars: usize, support: impl IntoIterator<Item = usize>) -> Self {
        let mut e = vec![0; nvars];
        for i in support {
            e[i] = 1;
        }
        Monomial(e)
    }

    /// Parses `x1^2*x3` style text over `ring`; `1` is the empty monomial.
    pub fn parse(ring: &Ring, text: &str) -> Result<Self> {
        let text = text.trim();
        let mut e = vec![0u32; ring.nvars()];
        if text == "1" {
            return Ok(Monomial(e));
        }
        for factor in text.split('*') {
            let factor = factor.trim();
            let (name, pow) = match factor.split_once('^') {
                Some((n, p)) => {
                    let p = p.trim().parse::<u32>().map_err(|_| {
                        Error::InvalidParameter(format!("bad exponent in `{factor}`"))
                    })?;
                    (n.trim(), p)
                }
                None => (factor, 1),
            };
            let i = ring
                .index_of(name)
                .ok_or_else(|| Error::UnknownVertex(name.to_string()))?;
            e[i] = e[i]
                .checked_add(pow)
                .ok_or_else(|| Error::InvalidParameter("exponent overflow".into()))?;
        }
        Ok(Monomial(e))
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    pub fn support_len(&self) -> usize {
        self.0.iter().filter(|&&e| e > 0).count()
    }

    pub fn is_square_free(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    /// `Some(i)` if the monomial is `x_i^a` with `a >= 1`.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.nvars(), other.nvars());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                .collect(),
        )
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial(
            self.0
                .iter()
                .map(|a| a.checked_mul(k).expect("exponent overflow"))
                .collect(),
        )
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    /// `self / gcd(self, other)`.
    pub fn quotient_by_gcd(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        )
    }

    /// Exact division; `None` unless `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }

    pub fn with_exp(mut self, i: usize, e: u32) -> Monomial {
        self.0[i] = e;
        self
    }

    /// Keeps only the variables in `support` (in order); the others are set to 1.
    pub fn restrict(&self, support: &[usize]) -> Monomial {
        Monomial(support.iter().map(|&i| self.0[i]).collect())
    }

    /// Canonical generator order: ascending degree, then descending
    /// lexicographic order on exponent vectors (`x1 > x2 > ...`).
    pub fn canonical_cmp(&self, other: &Monomial) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }

    pub fn display<'a>(&'a self, ring: &'a Ring) -> MonomialDisplay<'a> {
        MonomialDisplay { mono: self, ring }
    }
}

pub struct MonomialDisplay<'a> {
    mono: &'a Monomial,
    ring: &'a Ring,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mono.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.mono.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(self.ring.name(i))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// A prime generated by a nonempty set of variables, stored as sorted indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialPrime(Vec<usize>);

impl MonomialPrime {
    /// Sorts and deduplicates `support`. An empty support is allowed only as
    /// a transient value; every prime reported by the crate is nonempty.
    pub fn new(mut support: Vec<usize>) -> Self {
        support.sort_unstable();
        support.dedup();
        MonomialPrime(support)
    }

    pub fn from_labels<S: AsRef<str>>(ring: &Ring, labels: &[S]) -> Result<Self> {
        labels
            .iter()
            .map(|l| {
                ring.index_of(l.as_ref())
                    .ok_or_else(|| Error::UnknownVertex(l.as_ref().to_string()))
            })
            .collect::<Result<Vec<_>>>()
            .map(MonomialPrime::new)
    }

    pub fn support(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains_var(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    pub fn labels<'a>(&self, ring: &'a Ring) -> Vec<&'a str> {
        self.0.iter().map(|&i| ring.name(i)).collect()
    }

    pub fn display(&self, ring: &Ring) -> String {
        format!("<{}>", self.labels(ring).join(", "))
    }
}

/// Canonical order: by number of variables, then lexicographically.
impl Ord for MonomialPrime {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for MonomialPrime {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
