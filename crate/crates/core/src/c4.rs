//! 4-cycle detection and the degree condition for saturating matchings.
//!
//! In a bipartite graph a 4-cycle is two A-vertices sharing two common
//! B-neighbors, so C4-freeness is equivalent to every pairwise
//! neighborhood intersection having size at most 1. That caps the
//! overlap statistic of the neighborhood family at 1 and feeds the
//! transversal condition. The saturation check combines C4-freeness
//! with the per-vertex degree bound `deg(v)² ≥ 2e·|A|`; a passing
//! verdict certifies an A-saturating matching, but a failing one
//! proves nothing (the condition is sufficient, not necessary).

use alloc::vec::Vec;
use core::f64::consts::E;

use crate::graph::BipartiteGraph;
use crate::lll::holds_with_tolerance;

/// A 4-cycle `a0 − b0 − a1 − b1 − a0` witnessing two common neighbors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct C4Witness {
    pub a0: usize,
    pub a1: usize,
    pub b0: usize,
    pub b1: usize,
}

/// Finds a 4-cycle if one exists, scanning A-vertex pairs in
/// lexicographic order and reporting their two smallest common
/// neighbors. Every bipartite 4-cycle has exactly two vertices on each
/// side, so scanning within A is complete.
pub fn find_c4(graph: &BipartiteGraph) -> Option<C4Witness> {
    let n = graph.size_a();
    for a0 in 0..n {
        for a1 in a0 + 1..n {
            if let Some((b0, b1)) = two_common(graph.neighbors_a(a0), graph.neighbors_a(a1)) {
                return Some(C4Witness { a0, a1, b0, b1 });
            }
        }
    }
    None
}

/// First two common elements of two sorted slices, if they exist.
fn two_common(xs: &[usize], ys: &[usize]) -> Option<(usize, usize)> {
    let (mut i, mut j) = (0, 0);
    let mut first = None;
    while i < xs.len() && j < ys.len() {
        match xs[i].cmp(&ys[j]) {
            core::cmp::Ordering::Less => i += 1,
            core::cmp::Ordering::Greater => j += 1,
            core::cmp::Ordering::Equal => {
                match first {
                    None => first = Some(xs[i]),
                    Some(b0) => return Some((b0, xs[i])),
                }
                i += 1;
                j += 1;
            }
        }
    }
    None
}

/// Whether no two A-vertices share two common neighbors.
pub fn is_c4_free(graph: &BipartiteGraph) -> bool {
    find_c4(graph).is_none()
}

/// The degree bound `√(2e·n)` that every A-vertex must meet.
///
/// Verdicts compare in squared form (`deg² ≥ 2e·n`) with the shared
/// tie tolerance; this value is for display.
pub fn degree_threshold(n: usize) -> f64 {
    libm::sqrt(2.0 * E * n as f64)
}

/// Verdict of the saturating-matching condition, with the failing
/// evidence when it does not hold.
#[derive(Debug, Clone, PartialEq)]
pub struct SaturationReport {
    /// C4-free and every A-vertex meets the degree bound.
    pub holds: bool,
    /// `|A|`, the parameter of the degree bound.
    pub size_a: usize,
    /// `√(2e·|A|)` for display.
    pub threshold: f64,
    /// Minimum A-side degree; `None` when A is empty.
    pub min_degree: Option<usize>,
    /// A 4-cycle, when the graph has one.
    pub c4: Option<C4Witness>,
    /// All A-vertices with `deg² < 2e·|A|`, ascending. Isolated
    /// vertices count as deficient, not as errors.
    pub deficient: Vec<usize>,
}

/// Checks the two clauses of the saturating-matching condition:
/// C4-freeness and `deg(v)² ≥ 2e·|A|` for every `v ∈ A`.
///
/// A passing verdict is a sufficiency certificate only; graphs failing
/// it may still have A-saturating matchings.
pub fn check_saturation_condition(graph: &BipartiteGraph) -> SaturationReport {
    let n = graph.size_a();
    let c4 = find_c4(graph);
    let bound = 2.0 * E * n as f64;
    let mut deficient = Vec::new();
    let mut min_degree = None;
    for a in 0..n {
        let deg = graph.degree_a(a);
        min_degree = Some(min_degree.map_or(deg, |m: usize| m.min(deg)));
        let deg_squared = (deg as u64 * deg as u64) as f64;
        if !holds_with_tolerance(bound, deg_squared) {
            deficient.push(a);
        }
    }
    SaturationReport {
        holds: c4.is_none() && deficient.is_empty(),
        size_a: n,
        threshold: degree_threshold(n),
        min_degree,
        c4,
        deficient,
    }
}
