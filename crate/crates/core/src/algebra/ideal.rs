use std::fmt;

use super::monomial::{Monomial, MonomialPrime, Ring};
use crate::error::{Error, Result};

/// A monomial ideal stored by its minimal generators in canonical order.
///
/// The unit ideal is `{1}` and the zero ideal has no generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    ring: Ring,
    gens: Vec<Monomial>,
}

/// Sorts canonically, drops duplicates and every monomial divisible by
/// another one in the list.
pub fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_unstable_by(|a, b| a.canonical_cmp(b));
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        // A proper divisor has strictly smaller degree, so it is already kept.
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept
}

impl MonomialIdeal {
    pub fn new(ring: Ring, gens: Vec<Monomial>) -> Result<Self> {
        if let Some(bad) = gens.iter().find(|g| g.nvars() != ring.nvars()) {
            return Err(Error::ArityMismatch {
                expected: ring.nvars(),
                found: bad.nvars(),
            });
        }
        Ok(MonomialIdeal {
            gens: minimalize(gens),
            ring,
        })
    }

    /// Caller guarantees the arity of every generator.
    pub(crate) fn from_gens(ring: Ring, gens: Vec<Monomial>) -> Self {
        debug_assert!(gens.iter().all(|g| g.nvars() == ring.nvars()));
        MonomialIdeal {
            gens: minimalize(gens),
            ring,
        }
    }

    pub fn unit(ring: Ring) -> Self {
        let one = Monomial::one(ring.nvars());
        MonomialIdeal {
            gens: vec![one],
            ring,
        }
    }

    pub fn zero(ring: Ring) -> Self {
        MonomialIdeal {
            gens: Vec::new(),
            ring,
        }
    }

    /// The ideal generated by the variables of `prime`.
    pub fn from_prime(ring: Ring, prime: &MonomialPrime) -> Self {
        let n = ring.nvars();
        let gens = prime
            .support()
            .iter()
            .map(|&i| Monomial::var(n, i))
            .collect();
        MonomialIdeal::from_gens(ring, gens)
    }

    /// Parses a comma-separated generator list, optionally wrapped in brackets.
    pub fn parse(ring: Ring, text: &str) -> Result<Self> {
        let inner = text
            .trim()
            .trim_start_matches(['[', '<'])
            .trim_end_matches([']', '>'])
            .trim();
        let gens = if inner.is_empty() {
            Vec::new()
        } else {
            inner
                .split(',')
                .map(|g| Monomial::parse(&ring, g))
                .collect::<Result<Vec<_>>>()?
        };
        Ok(MonomialIdeal::from_gens(ring, gens))
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    /// No generators, i.e. the zero ideal.
    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_square_free(&self) -> bool {
        self.gens.iter().all(Monomial::is_square_free)
    }

    pub fn is_proper_nonzero(&self) -> bool {
        !self.is_zero() && !self.is_unit()
    }

    pub(crate) fn ensure_proper_nonzero(&self) -> Result<()> {
        if self.is_zero() {
            Err(Error::DegenerateIdeal("zero"))
        } else if self.is_unit() {
            Err(Error::DegenerateIdeal("unit"))
        } else {
            Ok(())
        }
    }

    fn same_ring(&self, other: &MonomialIdeal) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::AmbientMismatch)
        }
    }

    /// Largest exponent of each variable over the minimal generators.
    pub fn max_exponents(&self) -> Vec<u32> {
        let mut out = vec![0; self.nvars()];
        for g in &self.gens {
            for (o, &e) in out.iter_mut().zip(g.exponents()) {
                *o = (*o).max(e);
            }
        }
        out
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// `I ⊆ J`.
    pub fn is_subset_of(&self, other: &MonomialIdeal) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.same_ring(other)?;
        let mut gens = Vec::with_capacity(self.len() * other.len());
        for g in &self.gens {
            for h in &other.gens {
                gens.push(g.mul(h));
            }
        }
        Ok(MonomialIdeal::from_gens(self.ring.clone(), gens))
    }

    /// `I^s`, minimalizing after every multiplication; `I^0 = <1>`.
    pub fn power(&self, s: u32) -> MonomialIdeal {
        let mut acc = MonomialIdeal::unit(self.ring.clone());
        for _ in 0..s {
            acc = acc.product(self).expect("same ring");
        }
        acc
    }

    /// All powers `I^1, ..., I^s_max`.
    pub fn powers(&self, s_max: u32) -> Vec<MonomialIdeal> {
        let mut out: Vec<MonomialIdeal> = Vec::with_capacity(s_max as usize);
        for _ in 0..s_max {
            let next = match out.last() {
                Some(prev) => prev.product(self).expect("same ring"),
                None => self.clone(),
            };
            out.push(next);
        }
        out
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.same_ring(other)?;
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(MonomialIdeal::from_gens(self.ring.clone(), gens))
    }

    pub(crate) fn with_generator(&self, m: Monomial) -> MonomialIdeal {
        let mut gens: Vec<Monomial> = self
            .gens
            .iter()
            .filter(|g| !m.divides(g))
            .cloned()
            .collect();
        if !self.contains(&m) {
            gens.push(m);
        }
        gens.sort_unstable_by(|a, b| a.canonical_cmp(b));
        MonomialIdeal {
            ring: self.ring.clone(),
            gens,
        }
    }

    pub fn intersection(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.same_ring(other)?;
        let mut gens = Vec::with_capacity(self.len() * other.len());
        for g in &self.gens {
            for h in &other.gens {
                gens.push(g.lcm(h));
            }
        }
        Ok(MonomialIdeal::from_gens(self.ring.clone(), gens))
    }

    /// `I : <T>`.
    pub fn colon(&self, t: &Monomial) -> Result<MonomialIdeal> {
        if t.nvars() != self.nvars() {
            return Err(Error::ArityMismatch {
                expected: self.nvars(),
                found: t.nvars(),
            });
        }
        let gens = self.gens.iter().map(|g| g.quotient_by_gcd(t)).collect();
        Ok(MonomialIdeal::from_gens(self.ring.clone(), gens))
    }

    /// Whether the ideal is generated by exactly the variables of `prime`.
    pub fn equals_prime(&self, prime: &MonomialPrime) -> bool {
        self.gens.len() == prime.len()
            && self.gens.iter().all(|g| {
                g.degree() == 1 && g.pure_power_var().is_some_and(|i| prime.contains_var(i))
            })
    }

    /// The ideal obtained by setting every variable outside `support` to 1,
    /// viewed in the subring on `support`.
    pub fn localize(&self, support: &[usize]) -> MonomialIdeal {
        let ring = self.ring.restrict(support);
        let gens = self.gens.iter().map(|g| g.restrict(support)).collect();
        MonomialIdeal::from_gens(ring, gens)
    }

    pub fn display_generators(&self) -> String {
        self.gens
            .iter()
            .map(|g| g.display(&self.ring).to_string())
            .collect::<Vec<_>>()
            .join(", ")
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.display_generators())
    }
}
