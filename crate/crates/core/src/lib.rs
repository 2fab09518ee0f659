//! Finite specialization posets and semilattices.
//!
//! A specialization structure is a finite poset or join-semilattice carrying a
//! second, coarser preorder `[=` ("specialization"). The motivating reading is
//! "a is contained in the closure of b": every closure space induces such a
//! structure on its powerset, and conversely every finite specialization
//! semilattice embeds into one induced by a topology. This crate provides:
//!
//! - [`finorder`]: carriers, relations as boolean matrices, posets and
//!   join-semilattices, with conversions between order and join presentations;
//! - [`spec`]: specialization structures, axiom checkers with replayable
//!   witnesses, closure-operator extraction, and constructors from tolerance
//!   relations, weights, and semilattice homomorphisms;
//! - [`closure`]: finite closure spaces and topologies, continuity checks, and
//!   the powerset specialization structures they induce;
//! - [`embed`]: certified homomorphisms and embeddings, congruence quotients,
//!   and the embedding pipelines into principal, additive, and topological
//!   structures;
//! - [`folang`]: a parser and exhaustive evaluator for first-order sentences
//!   over the signatures `{\/, <=, [=, =}` and `{\/, R}`;
//! - [`enumerate`]: exhaustive small-structure generation up to isomorphism,
//!   the oracle bed for the theorem-level test sweeps;
//! - [`fixtures`]: small named structures used throughout the test suites.

pub mod closure;
pub mod embed;
pub mod enumerate;
pub mod finorder;
pub mod fixtures;
pub mod folang;
pub mod spec;

pub use finorder::{Carrier, JoinSemilattice, Poset, Relation};
pub use spec::{SpecPoset, SpecSemilattice};
