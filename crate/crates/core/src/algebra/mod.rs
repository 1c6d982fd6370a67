//! Exact arithmetic on monomials and monomial ideals.

mod decompose;
mod ideal;
mod monomial;

pub use decompose::{
    alexander_dual, associated_primes, associated_primes_with, decompose_with, enumerate_witnesses,
    has_maximal_associated_prime, intersect_components, irreducible_decomposition, witness_search,
    Algorithm, IrreducibleComponent,
};
pub use ideal::{minimalize, MonomialIdeal};
pub use monomial::{Monomial, MonomialDisplay, MonomialPrime, Ring};
