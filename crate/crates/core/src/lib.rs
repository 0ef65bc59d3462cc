//! Transversals of finite set families via the Lovász local lemma.
//!
//! A transversal (system of distinct representatives) picks one element
//! from each set of an indexed family so that all picks are distinct.
//! This crate provides:
//!
//! - canonical value types for set families, assignments, bipartite
//!   graphs, and matchings ([`family`], [`graph`]);
//! - the local-lemma machinery: collision probabilities, the dependency
//!   digraph of collision events, the general and symmetric local-lemma
//!   checks, and the `e·m·(2n−3) ≤ l²` sufficient condition for a
//!   transversal ([`lll`]);
//! - a Moser–Tardos style resampling solver that realizes the condition
//!   constructively ([`solver`]);
//! - exact ground-truth oracles: Hopcroft–Karp maximum matching,
//!   matching-based transversal existence, and Hall-condition witnesses
//!   ([`oracle`]);
//! - 4-cycle-freeness checks and the `deg(v) ≥ √(2e·|A|)` saturating-
//!   matching condition for bipartite graphs ([`c4`]);
//! - seeded instance generators, including projective-plane incidence
//!   graphs ([`gen`]).
//!
//! All types are immutable values, all operations are pure functions,
//! and everything driven by a seed is bit-reproducible. The crate is
//! `no_std` (with `alloc`); IO and file formats live in the companion
//! CLI crate.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod c4;
pub mod error;
pub mod family;
pub mod gen;
pub mod graph;
pub mod lll;
pub mod oracle;
pub mod rng;
pub mod solver;

pub use c4::{check_saturation_condition, degree_threshold, find_c4, is_c4_free, C4Witness, SaturationReport};
pub use error::DomainError;
pub use family::{validate_transversal, Assignment, FamilyStats, SetFamily, Transversal, TransversalError};
pub use gen::{gen_family, gen_plane_incidence, gen_threshold_instance, GenError, PlaneOrder};
pub use graph::{matching_from_transversal, validate_matching, BipartiteGraph, GraphError, Matching, MatchingError};
pub use lll::{
    check_lll_certificate, check_symmetric_lll, check_transversal_condition, collision_probability,
    transversal_condition, CertificateReport, ConditionReport, DependencyDigraph, LllCertificate, Rational,
};
pub use oracle::{find_transversal_exact, hall_violating_subfamily, max_matching};
pub use rng::{derive_seed, Rng};
pub use solver::{find_transversal, sample_tuple, violated_events, SolveOutcome, SolveResult};
