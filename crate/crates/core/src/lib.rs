//! Partial t-cover ideals of graphs and the associated primes of their
//! powers.
//!
//! [`algebra`] is an exact monomial-ideal toolkit whose irreducible
//! decomposition serves as the oracle for associated primes. [`cover`]
//! builds `J_t(G)`, [`analysis`] holds the closed forms for stars and trees
//! and the stability and witness checks, and [`hypergraph`] the chromatic
//! gap family.

pub mod algebra;
pub mod analysis;
pub mod corpus;
pub mod cover;
pub mod error;
pub mod exec;
pub mod graph;
pub mod hypergraph;
pub mod sweep;

pub use error::{Error, Result};
pub use exec::Execution;
