//! Constructive transversal search by resampling.
//!
//! Draw one uniform element per set independently; while some pair of
//! indices collides, redraw both members of the lexicographically
//! smallest colliding pair. This is the Moser–Tardos scheme for the
//! collision events: each event depends on the two draws it mentions,
//! and a resample step redraws exactly those. When the transversal
//! condition holds the expected number of steps is bounded by
//! `Σ x/(1−x) ≈ n/4`, so the default cap is far above it while still
//! finite for families with no transversal at all.
//!
//! Everything is deterministic given the seed; the pick rule and the
//! redraw order (`i` before `j`) are part of the contract.

use alloc::vec::Vec;

use crate::error::DomainError;
use crate::family::{Assignment, SetFamily, Transversal};
use crate::rng::Rng;

/// Result of a resampling run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveResult {
    /// A validated transversal was reached.
    Found(Transversal),
    /// The resample cap was hit with collisions still present. The
    /// method is incomplete: this does not certify non-existence.
    Exhausted,
}

/// Outcome telemetry of one solve call.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveOutcome {
    pub result: SolveResult,
    /// Resample steps performed; equals `max_resamples` on exhaustion.
    pub resamples: u64,
    pub max_resamples: u64,
    pub seed: u64,
}

impl SolveOutcome {
    pub fn transversal(&self) -> Option<&Transversal> {
        match &self.result {
            SolveResult::Found(t) => Some(t),
            SolveResult::Exhausted => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self.result, SolveResult::Found(_))
    }
}

/// Default resample cap: `10000 + 100·n²`, orders of magnitude above
/// the expected step count under the transversal condition.
pub fn default_max_resamples(n: usize) -> u64 {
    10_000 + 100 * (n as u64) * (n as u64)
}

/// Draws one uniform element per set, independently.
pub fn sample_tuple(family: &SetFamily, rng: &mut Rng) -> Result<Assignment, DomainError> {
    let mut choices = Vec::with_capacity(family.len());
    for index in 0..family.len() {
        let set = family.set(index);
        if set.is_empty() {
            return Err(DomainError::EmptySet { index });
        }
        choices.push(*rng.choose(set));
    }
    Ok(Assignment::new(choices))
}

/// All colliding index pairs `(i, j)` with `i < j`, lexicographically
/// sorted. Empty exactly when the choices are pairwise distinct.
pub fn violated_events(family: &SetFamily, assignment: &Assignment) -> Vec<(usize, usize)> {
    debug_assert_eq!(family.len(), assignment.len());
    let choices = assignment.choices();
    let mut pairs = Vec::new();
    for i in 0..choices.len() {
        for j in i + 1..choices.len() {
            if choices[i] == choices[j] {
                pairs.push((i, j));
            }
        }
    }
    pairs
}

fn first_collision(choices: &[u64]) -> Option<(usize, usize)> {
    for i in 0..choices.len() {
        for j in i + 1..choices.len() {
            if choices[i] == choices[j] {
                return Some((i, j));
            }
        }
    }
    None
}

/// Runs the resampling search from `seed` with at most `max_resamples`
/// steps. Identical inputs give identical outcomes.
pub fn find_transversal(family: &SetFamily, seed: u64, max_resamples: u64) -> Result<SolveOutcome, DomainError> {
    let mut rng = Rng::seed_from(seed);
    let mut choices = sample_tuple(family, &mut rng)?.into_choices();
    let mut resamples = 0u64;
    loop {
        match first_collision(&choices) {
            None => {
                let transversal = Transversal::new(family, Assignment::new(choices))
                    .expect("collision-free in-set choices form a transversal");
                return Ok(SolveOutcome {
                    result: SolveResult::Found(transversal),
                    resamples,
                    max_resamples,
                    seed,
                });
            }
            Some((i, j)) => {
                if resamples == max_resamples {
                    return Ok(SolveOutcome { result: SolveResult::Exhausted, resamples, max_resamples, seed });
                }
                resamples += 1;
                choices[i] = *rng.choose(family.set(i));
                choices[j] = *rng.choose(family.set(j));
            }
        }
    }
}
