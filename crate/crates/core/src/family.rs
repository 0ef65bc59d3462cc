//! Indexed families of finite sets, assignments, and transversals.
//!
//! A family is indexed by position, and a transversal is an injective
//! choice function on indices: `choice[i]` must lie in set `i` and all
//! choices must be pairwise distinct. Indexing by position (rather than
//! treating the family as a set of sets) keeps duplicate sets at
//! distinct indices meaningful, which is exactly what the neighborhood
//! families of bipartite graphs need. Indices are 0-based throughout.

use alloc::vec::Vec;
use thiserror::Error;

/// An indexed family of finite sets over non-negative integer labels.
///
/// Each set is stored sorted and duplicate-free; the constructor
/// normalizes its input. Labels are arbitrary `u64` values and need not
/// be contiguous.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetFamily {
    sets: Vec<Vec<u64>>,
}

impl SetFamily {
    /// Builds a family, sorting and de-duplicating each set.
    pub fn new(sets: Vec<Vec<u64>>) -> Self {
        let sets = sets
            .into_iter()
            .map(|mut s| {
                s.sort_unstable();
                s.dedup();
                s
            })
            .collect();
        SetFamily { sets }
    }

    /// Number of sets.
    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// The set at `index`, sorted ascending.
    pub fn set(&self, index: usize) -> &[u64] {
        &self.sets[index]
    }

    /// All sets in index order.
    pub fn sets(&self) -> impl Iterator<Item = &[u64]> {
        self.sets.iter().map(|s| s.as_slice())
    }

    /// Whether `element` belongs to set `index`.
    pub fn contains(&self, index: usize, element: u64) -> bool {
        self.sets[index].binary_search(&element).is_ok()
    }

    /// Size extremes of the family: the minimum set size, the maximum
    /// pairwise intersection over distinct index pairs, and the first
    /// empty set if any.
    pub fn stats(&self) -> FamilyStats {
        let n = self.sets.len();
        let mut min_size = None;
        let mut empty_index = None;
        for (i, s) in self.sets.iter().enumerate() {
            if s.is_empty() && empty_index.is_none() {
                empty_index = Some(i);
            }
            min_size = Some(min_size.map_or(s.len(), |m: usize| m.min(s.len())));
        }
        let mut max_overlap = 0;
        for i in 0..n {
            for j in i + 1..n {
                max_overlap = max_overlap.max(intersection_size(&self.sets[i], &self.sets[j]));
            }
        }
        FamilyStats { n, min_size, max_overlap, empty_index }
    }
}

/// Summary statistics of a [`SetFamily`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilyStats {
    /// Number of sets.
    pub n: usize,
    /// Minimum set size, `None` for an empty family (no sets).
    pub min_size: Option<usize>,
    /// Maximum `|S_i ∩ S_j|` over distinct pairs `i ≠ j`; 0 when `n < 2`.
    pub max_overlap: usize,
    /// Index of the first empty set, if any.
    pub empty_index: Option<usize>,
}

impl FamilyStats {
    pub fn has_empty_set(&self) -> bool {
        self.empty_index.is_some()
    }
}

/// One chosen element per index; not yet checked against a family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assignment {
    choices: Vec<u64>,
}

impl Assignment {
    pub fn new(choices: Vec<u64>) -> Self {
        Assignment { choices }
    }

    pub fn len(&self) -> usize {
        self.choices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.choices.is_empty()
    }

    pub fn choices(&self) -> &[u64] {
        &self.choices
    }

    pub fn into_choices(self) -> Vec<u64> {
        self.choices
    }
}

/// A validated transversal: every choice lies in its set and all
/// choices are pairwise distinct. Only [`Transversal::new`] constructs
/// one, so holding a value is proof of validity for the family it was
/// checked against.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transversal {
    choices: Vec<u64>,
}

impl Transversal {
    /// Validates `assignment` against `family` and wraps it.
    pub fn new(family: &SetFamily, assignment: Assignment) -> Result<Self, TransversalError> {
        validate_transversal(family, &assignment)?;
        Ok(Transversal { choices: assignment.choices })
    }

    pub fn len(&self) -> usize {
        self.choices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.choices.is_empty()
    }

    /// The chosen element for each index.
    pub fn choices(&self) -> &[u64] {
        &self.choices
    }

    pub fn to_assignment(&self) -> Assignment {
        Assignment::new(self.choices.clone())
    }
}

/// Why an assignment is not a transversal of a family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum TransversalError {
    /// The assignment does not even have one choice per set.
    #[error("assignment has {found} choices but the family has {expected} sets")]
    LengthMismatch { expected: usize, found: usize },
    /// A choice lies outside its set.
    #[error("element {element} at index {index} is not in its set")]
    NotMember { index: usize, element: u64 },
    /// Two indices chose the same element.
    #[error("indices {first} and {second} both chose {element}")]
    Collision { first: usize, second: usize, element: u64 },
}

/// Checks that `assignment` is a transversal of `family`, reporting the
/// first violation in index order.
///
/// At each index the membership check runs before the distinctness
/// check; a collision is attributed to the later of the two indices.
pub fn validate_transversal(family: &SetFamily, assignment: &Assignment) -> Result<(), TransversalError> {
    if assignment.len() != family.len() {
        return Err(TransversalError::LengthMismatch {
            expected: family.len(),
            found: assignment.len(),
        });
    }
    let mut seen: alloc::collections::BTreeMap<u64, usize> = alloc::collections::BTreeMap::new();
    for (i, &x) in assignment.choices().iter().enumerate() {
        if !family.contains(i, x) {
            return Err(TransversalError::NotMember { index: i, element: x });
        }
        if let Some(&first) = seen.get(&x) {
            return Err(TransversalError::Collision { first, second: i, element: x });
        }
        seen.insert(x, i);
    }
    Ok(())
}

/// Size of the intersection of two sorted slices.
pub(crate) fn intersection_size(a: &[u64], b: &[u64]) -> usize {
    let mut count = 0;
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            core::cmp::Ordering::Less => i += 1,
            core::cmp::Ordering::Greater => j += 1,
            core::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}
