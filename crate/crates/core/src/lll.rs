//! Local-lemma condition checking for collision events.
//!
//! Drawing one uniform element per set independently, the bad event for
//! an index pair `{i, j}` is that both draws coincide. This module
//! computes the exact probability of such an event, builds the
//! dependency digraph over all pairs (two events are adjacent iff they
//! share an index, so each event has exactly `2n−4` neighbors), and
//! checks three conditions:
//!
//! - the general local-lemma certificate `p_i ≤ x_i · ∏ (1 − x_j)`;
//! - the symmetric form `e·p·(d+1) ≤ 1`;
//! - the transversal condition `e·m·(2n−3) ≤ l²`, where `l` is the
//!   minimum set size and `m` the maximum pairwise intersection, which
//!   instantiates the symmetric form with `p = m/l²` and `d = 2n−4`.
//!
//! All verdict comparisons share a relative tie tolerance of
//! [`RELATIVE_TOLERANCE`] in favor of "holds": inputs are integers, so
//! genuine boundary collisions do not arise, and the tolerance only
//! shields the irrational constant `e` from rounding at the margin.

use alloc::vec::Vec;
use core::f64::consts::E;

use crate::error::DomainError;
use crate::family::{intersection_size, FamilyStats, SetFamily};

/// Relative tie tolerance for all condition verdicts.
pub const RELATIVE_TOLERANCE: f64 = 1e-12;

/// `lhs ≤ rhs`, up to [`RELATIVE_TOLERANCE`] in favor of acceptance.
pub(crate) fn holds_with_tolerance(lhs: f64, rhs: f64) -> bool {
    let scale = lhs.abs().max(rhs.abs()).max(1.0);
    lhs <= rhs + RELATIVE_TOLERANCE * scale
}

/// Verdict plus the two sides of the inequality it evaluated.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConditionReport {
    pub holds: bool,
    pub lhs: f64,
    pub rhs: f64,
}

impl ConditionReport {
    /// How much room the condition has: positive when it holds strictly.
    pub fn margin(&self) -> f64 {
        self.rhs - self.lhs
    }
}

/// An exact non-negative rational, kept in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rational {
    num: u64,
    den: u64,
}

impl core::fmt::Display for Rational {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl Rational {
    /// Reduces `num/den`. Panics if `den` is zero.
    pub fn new(num: u64, den: u64) -> Self {
        assert!(den != 0, "zero denominator");
        let g = gcd(num, den);
        Rational { num: num / g, den: den / g }
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a.max(1)
}

/// Exact probability that independent uniform draws from sets `i` and
/// `j` collide: `|S_i ∩ S_j| / (|S_i|·|S_j|)`.
pub fn collision_probability(family: &SetFamily, i: usize, j: usize) -> Result<Rational, DomainError> {
    let n = family.len();
    for index in [i, j] {
        if index >= n {
            return Err(DomainError::IndexOutOfRange { index, len: n });
        }
    }
    if i == j {
        return Err(DomainError::SameIndex { index: i });
    }
    for index in [i, j] {
        if family.set(index).is_empty() {
            return Err(DomainError::EmptySet { index });
        }
    }
    let num = intersection_size(family.set(i), family.set(j)) as u64;
    let den = family.set(i).len() as u64 * family.set(j).len() as u64;
    Ok(Rational::new(num, den))
}

/// The dependency digraph of the collision events over `n` indices.
///
/// Events are the unordered pairs `{i, j}` with `i < j`, listed in
/// lexicographic order; two events are adjacent iff they share an
/// index. Adjacency is symmetric and each event has `2(n−2)` neighbors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DependencyDigraph {
    n: usize,
    events: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl DependencyDigraph {
    /// Builds the digraph for `n ≥ 2` indices.
    pub fn new(n: usize) -> Result<Self, DomainError> {
        if n < 2 {
            return Err(DomainError::TooFewIndices { n, required: 2 });
        }
        let mut events = Vec::with_capacity(n * (n - 1) / 2);
        for i in 0..n {
            for j in i + 1..n {
                events.push((i, j));
            }
        }
        let digraph_stub = DependencyDigraph { n, events, adjacency: Vec::new() };
        let mut adjacency = Vec::with_capacity(digraph_stub.events.len());
        for &(i, j) in &digraph_stub.events {
            let mut around = Vec::with_capacity(2 * (n - 2));
            for k in 0..n {
                if k == i || k == j {
                    continue;
                }
                around.push(digraph_stub.event_id(i.min(k), i.max(k)).unwrap());
                around.push(digraph_stub.event_id(j.min(k), j.max(k)).unwrap());
            }
            around.sort_unstable();
            adjacency.push(around);
        }
        Ok(DependencyDigraph { adjacency, ..digraph_stub })
    }

    pub fn index_count(&self) -> usize {
        self.n
    }

    /// Events `(i, j)` with `i < j` in lexicographic order; the position
    /// in this slice is the event id.
    pub fn events(&self) -> &[(usize, usize)] {
        &self.events
    }

    pub fn event_count(&self) -> usize {
        self.events.len()
    }

    /// Event id of the pair `{i, j}` with `i < j`.
    pub fn event_id(&self, i: usize, j: usize) -> Option<usize> {
        if i >= j || j >= self.n {
            return None;
        }
        Some(i * (2 * self.n - i - 1) / 2 + (j - i - 1))
    }

    /// Ids of the events sharing an index with `event`, sorted.
    pub fn neighbors(&self, event: usize) -> &[usize] {
        &self.adjacency[event]
    }
}

/// Per-event probabilities and weights over a dependency digraph, the
/// inputs of the general local-lemma check.
#[derive(Debug, Clone, PartialEq)]
pub struct LllCertificate {
    digraph: DependencyDigraph,
    probabilities: Vec<f64>,
    weights: Vec<f64>,
}

impl LllCertificate {
    /// Requires one probability in `[0, 1]` and one weight in `[0, 1)`
    /// per event.
    pub fn new(
        digraph: DependencyDigraph,
        probabilities: Vec<f64>,
        weights: Vec<f64>,
    ) -> Result<Self, DomainError> {
        let expected = digraph.event_count();
        for v in [&probabilities, &weights] {
            if v.len() != expected {
                return Err(DomainError::CertificateShape { expected, found: v.len() });
            }
        }
        for &p in &probabilities {
            if !(p.is_finite() && (0.0..=1.0).contains(&p)) {
                return Err(DomainError::ProbabilityOutOfRange { value: p });
            }
        }
        for &x in &weights {
            if !(x.is_finite() && (0.0..1.0).contains(&x)) {
                return Err(DomainError::WeightOutOfRange { value: x });
            }
        }
        Ok(LllCertificate { digraph, probabilities, weights })
    }

    pub fn digraph(&self) -> &DependencyDigraph {
        &self.digraph
    }
}

/// Outcome of the general local-lemma check.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CertificateReport {
    /// Whether every event satisfies `p_i ≤ x_i · ∏ (1 − x_j)`.
    pub holds: bool,
    /// Minimum of `x_i · ∏ (1 − x_j) − p_i` over events.
    pub min_slack: f64,
    /// Event pair attaining the minimum slack.
    pub worst_event: Option<(usize, usize)>,
    /// `∏ (1 − x_i)`: when the check holds, the probability that no
    /// event occurs is at least this (informational).
    pub complement_bound: f64,
}

/// Checks the general local-lemma condition event by event, treating
/// adjacency as symmetric.
pub fn check_lll_certificate(cert: &LllCertificate) -> CertificateReport {
    let mut holds = true;
    let mut min_slack = f64::INFINITY;
    let mut worst_event = None;
    for (id, &(i, j)) in cert.digraph.events().iter().enumerate() {
        let mut budget = cert.weights[id];
        for &other in cert.digraph.neighbors(id) {
            budget *= 1.0 - cert.weights[other];
        }
        let p = cert.probabilities[id];
        if !holds_with_tolerance(p, budget) {
            holds = false;
        }
        let slack = budget - p;
        if slack < min_slack {
            min_slack = slack;
            worst_event = Some((i, j));
        }
    }
    let complement_bound = cert.weights.iter().fold(1.0, |acc, &x| acc * (1.0 - x));
    CertificateReport { holds, min_slack, worst_event, complement_bound }
}

/// Symmetric local-lemma condition: with every event of probability at
/// most `p` and dependent on at most `d` others, `e·p·(d+1) ≤ 1`
/// guarantees that with positive probability no event occurs.
pub fn check_symmetric_lll(p: f64, d: usize) -> Result<ConditionReport, DomainError> {
    if !(p.is_finite() && (0.0..=1.0).contains(&p)) {
        return Err(DomainError::ProbabilityOutOfRange { value: p });
    }
    let lhs = E * p * (d as f64 + 1.0);
    let rhs = 1.0;
    Ok(ConditionReport { holds: holds_with_tolerance(lhs, rhs), lhs, rhs })
}

/// The transversal condition in squared form: `e·m·(2n−3) ≤ l²`.
///
/// `min_size_squared` is `l²`; comparing squares avoids taking a root
/// at the boundary. For `n ≤ 1` the left side is zero (there are no
/// collision events), so the report always holds.
pub fn transversal_condition(n: usize, max_overlap: usize, min_size_squared: u64) -> ConditionReport {
    let pair_degree_plus_one = (2 * n).saturating_sub(3); // 2n−3, floored at 0
    let lhs = E * max_overlap as f64 * pair_degree_plus_one as f64;
    let rhs = min_size_squared as f64;
    ConditionReport { holds: holds_with_tolerance(lhs, rhs), lhs, rhs }
}

/// Checks the transversal condition for a family's statistics.
///
/// Errors if a set is empty (the uniform draw behind the condition is
/// undefined). A family with zero sets holds vacuously and a family
/// with one nonempty set holds outright; both report `lhs = 0`.
pub fn check_transversal_condition(stats: &FamilyStats) -> Result<ConditionReport, DomainError> {
    if let Some(index) = stats.empty_index {
        return Err(DomainError::EmptySet { index });
    }
    let min_size_squared = match stats.min_size {
        None => 0,
        Some(l) => (l as u64) * (l as u64),
    };
    Ok(transversal_condition(stats.n, stats.max_overlap, min_size_squared))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn family(sets: &[&[u64]]) -> SetFamily {
        SetFamily::new(sets.iter().map(|s| s.to_vec()).collect())
    }

    #[test]
    fn probability_disjoint_is_zero() {
        let f = family(&[&[0, 1], &[2, 3]]);
        assert_eq!(collision_probability(&f, 0, 1).unwrap(), Rational::new(0, 1));
    }

    #[test]
    fn probability_equal_two_sets_is_half() {
        let f = family(&[&[0, 1], &[0, 1]]);
        let p = collision_probability(&f, 0, 1).unwrap();
        assert_eq!((p.num(), p.den()), (1, 2));
    }

    #[test]
    fn probability_three_by_four_overlap_two() {
        let f = family(&[&[0, 1, 2], &[1, 2, 5, 9]]);
        let p = collision_probability(&f, 0, 1).unwrap();
        assert_eq!((p.num(), p.den()), (1, 6));
    }

    #[test]
    fn probability_is_symmetric_and_guarded() {
        let f = family(&[&[0, 1, 2], &[1, 2, 5, 9], &[]]);
        assert_eq!(
            collision_probability(&f, 0, 1),
            collision_probability(&f, 1, 0)
        );
        assert_eq!(collision_probability(&f, 0, 0), Err(DomainError::SameIndex { index: 0 }));
        assert_eq!(collision_probability(&f, 0, 2), Err(DomainError::EmptySet { index: 2 }));
        assert_eq!(
            collision_probability(&f, 0, 3),
            Err(DomainError::IndexOutOfRange { index: 3, len: 3 })
        );
    }

    #[test]
    fn digraph_smallest_cases() {
        let d2 = DependencyDigraph::new(2).unwrap();
        assert_eq!(d2.events(), &[(0, 1)]);
        assert_eq!(d2.neighbors(0), &[] as &[usize]);

        let d3 = DependencyDigraph::new(3).unwrap();
        assert_eq!(d3.event_count(), 3);
        for e in 0..3 {
            assert_eq!(d3.neighbors(e).len(), 2);
        }

        let d4 = DependencyDigraph::new(4).unwrap();
        assert_eq!(d4.event_count(), 6);
        for e in 0..6 {
            assert_eq!(d4.neighbors(e).len(), 4);
        }

        assert_eq!(DependencyDigraph::new(1).unwrap_err(), DomainError::TooFewIndices { n: 1, required: 2 });
    }

    #[test]
    fn digraph_adjacency_is_shared_index_and_symmetric() {
        let d = DependencyDigraph::new(6).unwrap();
        for (id, &(i, j)) in d.events().iter().enumerate() {
            for &other in d.neighbors(id) {
                let (a, b) = d.events()[other];
                assert!(a == i || a == j || b == i || b == j);
                assert!(d.neighbors(other).contains(&id));
            }
        }
    }

    #[test]
    fn event_id_matches_position() {
        let d = DependencyDigraph::new(7).unwrap();
        for (id, &(i, j)) in d.events().iter().enumerate() {
            assert_eq!(d.event_id(i, j), Some(id));
        }
        assert_eq!(d.event_id(3, 3), None);
        assert_eq!(d.event_id(0, 7), None);
    }

    #[test]
    fn symmetric_check_examples() {
        assert!(check_symmetric_lll(0.0, 100).unwrap().holds);

        // Boundary: e·(1/(2e))·2 = 1.
        let boundary = check_symmetric_lll(1.0 / (2.0 * E), 1).unwrap();
        assert!(boundary.holds);
        assert!(boundary.margin().abs() < 1e-9);

        let failing = check_symmetric_lll(0.5, 3).unwrap();
        assert!(!failing.holds);
        assert!((failing.lhs - 2.0 * E).abs() < 1e-12);

        assert!(check_symmetric_lll(1.5, 0).is_err());
        assert!(check_symmetric_lll(f64::NAN, 0).is_err());
    }

    #[test]
    fn certificate_all_zero_probabilities() {
        let d = DependencyDigraph::new(4).unwrap();
        let k = d.event_count();
        let cert = LllCertificate::new(d, vec![0.0; k], vec![0.3; k]).unwrap();
        assert!(check_lll_certificate(&cert).holds);
    }

    #[test]
    fn certificate_single_event_boundary() {
        // One event, no neighbors: empty product, so the budget is x.
        let d = DependencyDigraph::new(2).unwrap();
        let cert = LllCertificate::new(d, vec![0.5], vec![0.5]).unwrap();
        let report = check_lll_certificate(&cert);
        assert!(report.holds);
        assert_eq!(report.min_slack, 0.0);
        assert_eq!(report.worst_event, Some((0, 1)));
        assert_eq!(report.complement_bound, 0.5);
    }

    #[test]
    fn certificate_symmetric_five_indices() {
        // 10 events, 6 neighbors each; x = 1/7 and p = 1/(7e) satisfy
        // p ≤ x(1−x)^6 because (1−1/7)^6 ≥ 1/e.
        let d = DependencyDigraph::new(5).unwrap();
        let k = d.event_count();
        let x = 1.0 / 7.0;
        let p = 1.0 / (7.0 * E);
        let cert = LllCertificate::new(d, vec![p; k], vec![x; k]).unwrap();
        let report = check_lll_certificate(&cert);
        assert!(report.holds);
        let budget = x * (1.0 - x).powi(6);
        assert!((report.min_slack - (budget - p)).abs() < 1e-15);
    }

    #[test]
    fn certificate_shape_and_range_guards() {
        let d = DependencyDigraph::new(3).unwrap();
        assert_eq!(
            LllCertificate::new(d.clone(), vec![0.0; 2], vec![0.1; 3]).unwrap_err(),
            DomainError::CertificateShape { expected: 3, found: 2 }
        );
        assert_eq!(
            LllCertificate::new(d.clone(), vec![0.0; 3], vec![1.0; 3]).unwrap_err(),
            DomainError::WeightOutOfRange { value: 1.0 }
        );
        assert_eq!(
            LllCertificate::new(d, vec![2.0; 3], vec![0.1; 3]).unwrap_err(),
            DomainError::ProbabilityOutOfRange { value: 2.0 }
        );
    }

    #[test]
    fn transversal_condition_examples() {
        // n=3, m=1, l=3: lhs = 3e ≈ 8.15 ≤ 9.
        let r = transversal_condition(3, 1, 9);
        assert!(r.holds);
        assert!((r.lhs - 3.0 * E).abs() < 1e-12);
        assert_eq!(r.rhs, 9.0);

        // Disjoint sets: m = 0 holds for any n.
        assert!(transversal_condition(40, 0, 1).holds);

        // Far side: n=3, m=3, l=2 gives lhs = 9e > 4.
        assert!(!transversal_condition(3, 3, 4).holds);
    }

    #[test]
    fn checked_condition_handles_degenerate_sizes() {
        assert!(check_transversal_condition(&family(&[]).stats()).unwrap().holds);
        assert!(check_transversal_condition(&family(&[&[5, 6]]).stats()).unwrap().holds);
        assert_eq!(
            check_transversal_condition(&family(&[&[1], &[]]).stats()),
            Err(DomainError::EmptySet { index: 1 })
        );
    }

    #[test]
    fn verdict_is_monotone_over_parameter_grid() {
        // Loosening any one parameter never flips holds -> fails:
        // larger l, smaller m, or smaller n (n ≥ 2).
        for n in 2..=21usize {
            for l in 1..=25u64 {
                for m in 0..=25usize {
                    if !transversal_condition(n, m, l * l).holds {
                        continue;
                    }
                    assert!(transversal_condition(n, m, (l + 1) * (l + 1)).holds);
                    if m > 0 {
                        assert!(transversal_condition(n, m - 1, l * l).holds);
                    }
                    if n > 2 {
                        assert!(transversal_condition(n - 1, m, l * l).holds);
                    }
                }
            }
        }
    }

    #[test]
    fn checker_chain_is_consistent() {
        // Whenever the transversal condition holds for (n, l, m), the
        // symmetric certificate p = m/l², d = 2n−4 passes, and so does
        // the general certificate with x = 1/(2n−3) (n ≥ 3; for n = 2
        // the weight 1/(2n−3) = 1 is out of range, so only the
        // symmetric form applies).
        for n in 2..=50usize {
            for l in 1..=12u64 {
                for m in 0..=6usize {
                    if !transversal_condition(n, m, l * l).holds {
                        continue;
                    }
                    let p = m as f64 / (l * l) as f64;
                    let d = 2 * n - 4;
                    assert!(check_symmetric_lll(p, d).unwrap().holds, "n={n} l={l} m={m}");
                    if n >= 3 {
                        let digraph = DependencyDigraph::new(n).unwrap();
                        let k = digraph.event_count();
                        let x = 1.0 / (2 * n - 3) as f64;
                        let cert = LllCertificate::new(digraph, vec![p; k], vec![x; k]).unwrap();
                        assert!(check_lll_certificate(&cert).holds, "n={n} l={l} m={m}");
                    }
                }
            }
        }
    }
}
