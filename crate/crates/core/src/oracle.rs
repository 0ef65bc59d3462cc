//! Exact ground-truth decision procedures.
//!
//! Maximum matching decides transversal existence exactly: build the
//! incidence graph with one A-vertex per set and one B-vertex per
//! distinct element of the union, then a transversal exists iff the
//! maximum matching saturates A. The subset enumerator produces the
//! complementary witness, a subfamily whose union is smaller than the
//! subfamily itself; by Hall's theorem exactly one of the two witnesses
//! exists.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::DomainError;
use crate::family::{Assignment, SetFamily, Transversal};
use crate::graph::{BipartiteGraph, Matching};

/// Default cap for [`hall_violating_subfamily`]'s exponential scan.
pub const DEFAULT_SUBFAMILY_LIMIT: usize = 20;

const INF: u32 = u32::MAX;

/// Maximum-cardinality matching by Hopcroft–Karp, `O(E·√V)`.
///
/// Deterministic: augmenting paths follow the sorted adjacency lists.
pub fn max_matching(graph: &BipartiteGraph) -> Matching {
    let na = graph.size_a();
    let mut pair_a: Vec<Option<usize>> = vec![None; na];
    let mut pair_b: Vec<Option<usize>> = vec![None; graph.size_b()];
    let mut dist: Vec<u32> = vec![INF; na];

    loop {
        // BFS phase: layer the graph from unmatched A-vertices.
        let mut queue = VecDeque::new();
        for a in 0..na {
            if pair_a[a].is_none() {
                dist[a] = 0;
                queue.push_back(a);
            } else {
                dist[a] = INF;
            }
        }
        let mut reachable_free_b = false;
        while let Some(a) = queue.pop_front() {
            for &b in graph.neighbors_a(a) {
                match pair_b[b] {
                    None => reachable_free_b = true,
                    Some(a_next) => {
                        if dist[a_next] == INF {
                            dist[a_next] = dist[a] + 1;
                            queue.push_back(a_next);
                        }
                    }
                }
            }
        }
        if !reachable_free_b {
            break;
        }
        // DFS phase: vertex-disjoint augmenting paths along the layers.
        for a in 0..na {
            if pair_a[a].is_none() {
                augment(graph, a, &mut pair_a, &mut pair_b, &mut dist);
            }
        }
    }

    let pairs = pair_a
        .iter()
        .enumerate()
        .filter_map(|(a, b)| b.map(|b| (a, b)))
        .collect();
    Matching::new(pairs)
}

fn augment(
    graph: &BipartiteGraph,
    a: usize,
    pair_a: &mut [Option<usize>],
    pair_b: &mut [Option<usize>],
    dist: &mut [u32],
) -> bool {
    for &b in graph.neighbors_a(a) {
        let extendable = match pair_b[b] {
            None => true,
            Some(a_next) => dist[a_next] == dist[a] + 1 && augment(graph, a_next, pair_a, pair_b, dist),
        };
        if extendable {
            pair_a[a] = Some(b);
            pair_b[b] = Some(a);
            return true;
        }
    }
    dist[a] = INF;
    false
}

/// The incidence graph of a family: A = set indices, B = distinct
/// elements of the union in ascending order, edges = membership.
fn incidence_graph(family: &SetFamily) -> (BipartiteGraph, Vec<u64>) {
    let mut elements: Vec<u64> = family.sets().flat_map(|s| s.iter().copied()).collect();
    elements.sort_unstable();
    elements.dedup();
    let mut edges = Vec::new();
    for (i, set) in family.sets().enumerate() {
        for &x in set {
            let b = elements.binary_search(&x).expect("element is in the union");
            edges.push((i, b));
        }
    }
    let graph = BipartiteGraph::new(family.len(), elements.len(), edges)
        .expect("incidence edges are in range and duplicate-free");
    (graph, elements)
}

/// Decides transversal existence exactly, returning a witness when one
/// exists. Always terminates in matching time; no condition needed.
pub fn find_transversal_exact(family: &SetFamily) -> Option<Transversal> {
    let (graph, elements) = incidence_graph(family);
    let matching = max_matching(&graph);
    if matching.len() != family.len() {
        return None;
    }
    let mut choices = vec![0u64; family.len()];
    for &(a, b) in matching.pairs() {
        choices[a] = elements[b];
    }
    let transversal = Transversal::new(family, Assignment::new(choices))
        .expect("a saturating matching of the incidence graph is a transversal");
    Some(transversal)
}

/// Searches for a subfamily violating Hall's condition: indices `F'`
/// with `|⋃ F'| < |F'|`. Returns the first witness in subset-size-then-
/// lexicographic order, or `None` when every subfamily is covered,
/// which coincides with [`find_transversal_exact`] succeeding.
///
/// Enumeration is exponential, so families larger than `max_sets` are
/// refused.
pub fn hall_violating_subfamily(family: &SetFamily, max_sets: usize) -> Result<Option<Vec<usize>>, DomainError> {
    let n = family.len();
    if n > max_sets {
        return Err(DomainError::FamilyTooLarge { n, limit: max_sets });
    }
    let mut union = Vec::new();
    for size in 1..=n {
        let mut subset: Vec<usize> = (0..size).collect();
        loop {
            union.clear();
            for &i in &subset {
                union.extend_from_slice(family.set(i));
            }
            union.sort_unstable();
            union.dedup();
            if union.len() < size {
                return Ok(Some(subset));
            }
            if !next_combination(&mut subset, n) {
                break;
            }
        }
    }
    Ok(None)
}

/// Advances `subset` to the next size-k combination of `0..n` in
/// lexicographic order; false when exhausted.
fn next_combination(subset: &mut [usize], n: usize) -> bool {
    let k = subset.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if subset[i] < n - k + i {
            subset[i] += 1;
            for j in i + 1..k {
                subset[j] = subset[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
