//! Precondition failures shared across the checking and solving modules.

use thiserror::Error;

/// An operation was called outside its domain.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum DomainError {
    /// A uniform draw from an empty set is undefined.
    #[error("set {index} is empty")]
    EmptySet { index: usize },
    /// A set index does not exist in the family.
    #[error("index {index} out of range for {len} sets")]
    IndexOutOfRange { index: usize, len: usize },
    /// A collision event needs two distinct indices.
    #[error("indices are both {index}; a collision event needs two distinct sets")]
    SameIndex { index: usize },
    /// The dependency digraph is only defined for two or more indices.
    #[error("need at least {required} indices, got {n}")]
    TooFewIndices { n: usize, required: usize },
    /// Event probabilities must lie in [0, 1].
    #[error("probability {value} is not in [0, 1]")]
    ProbabilityOutOfRange { value: f64 },
    /// Certificate weights must lie in [0, 1).
    #[error("weight {value} is not in [0, 1)")]
    WeightOutOfRange { value: f64 },
    /// A certificate vector does not match the digraph's event count.
    #[error("expected {expected} per-event values, got {found}")]
    CertificateShape { expected: usize, found: usize },
    /// Subset enumeration refused a family above the capacity limit.
    #[error("family has {n} sets, above the enumeration limit {limit}; use the matching oracle instead")]
    FamilyTooLarge { n: usize, limit: usize },
}
