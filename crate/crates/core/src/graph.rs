//! Bipartite graphs, matchings, and the translations between graphs
//! and set families.
//!
//! The bipartition is explicit: vertices `0..size_a` on the A side and
//! `0..size_b` on the B side, edges as `(a, b)` pairs. The neighborhood
//! family of a graph indexes, for each A-vertex, the set of its B
//! neighbors; a transversal of that family is exactly an A-saturating
//! matching.

use alloc::vec;
use alloc::vec::Vec;
use thiserror::Error;

use crate::family::{validate_transversal, SetFamily, Transversal, TransversalError};

/// A bipartite graph with vertex sides `0..size_a` and `0..size_b`.
///
/// Edges are stored sorted lexicographically and duplicate-free;
/// construction validates ranges and rejects duplicates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    size_a: usize,
    size_b: usize,
    edges: Vec<(usize, usize)>,
    adj_a: Vec<Vec<usize>>,
}

impl BipartiteGraph {
    pub fn new(size_a: usize, size_b: usize, mut edges: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        for &(a, b) in &edges {
            if a >= size_a || b >= size_b {
                return Err(GraphError::EdgeOutOfRange { a, b, size_a, size_b });
            }
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge { a: w[0].0, b: w[0].1 });
        }
        let mut adj_a = vec![Vec::new(); size_a];
        for &(a, b) in &edges {
            adj_a[a].push(b);
        }
        Ok(BipartiteGraph { size_a, size_b, edges, adj_a })
    }

    pub fn size_a(&self) -> usize {
        self.size_a
    }

    pub fn size_b(&self) -> usize {
        self.size_b
    }

    /// Edges sorted lexicographically.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.size_a && self.adj_a[a].binary_search(&b).is_ok()
    }

    /// B-neighbors of an A-vertex, sorted ascending.
    pub fn neighbors_a(&self, a: usize) -> &[usize] {
        &self.adj_a[a]
    }

    pub fn degree_a(&self, a: usize) -> usize {
        self.adj_a[a].len()
    }

    /// The family of B-neighborhoods, one set per A-vertex in vertex
    /// order. Set `v` has exactly `deg(v)` elements.
    pub fn neighbor_family(&self) -> SetFamily {
        SetFamily::new(
            self.adj_a
                .iter()
                .map(|ns| ns.iter().map(|&b| b as u64).collect())
                .collect(),
        )
    }
}

/// Invalid bipartite graph construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge ({a}, {b}) out of range for sides {size_a} and {size_b}")]
    EdgeOutOfRange { a: usize, b: usize, size_a: usize, size_b: usize },
    #[error("duplicate edge ({a}, {b})")]
    DuplicateEdge { a: usize, b: usize },
}

/// A set of `(a, b)` pairs; validity against a host graph is checked by
/// [`validate_matching`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    pairs: Vec<(usize, usize)>,
}

impl Matching {
    /// Builds a matching value, sorting and de-duplicating the pairs.
    pub fn new(mut pairs: Vec<(usize, usize)>) -> Self {
        pairs.sort_unstable();
        pairs.dedup();
        Matching { pairs }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Pairs sorted lexicographically.
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }
}

/// Why a pair set is not a (saturating) matching of a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum MatchingError {
    #[error("pair ({a}, {b}) is not an edge of the graph")]
    NotAnEdge { a: usize, b: usize },
    #[error("vertex {vertex} on side A is matched more than once")]
    ReusedA { vertex: usize },
    #[error("vertex {vertex} on side B is matched more than once")]
    ReusedB { vertex: usize },
    #[error("matching covers {matched} of {required} A-vertices")]
    NotSaturating { matched: usize, required: usize },
}

/// Checks that every pair is an edge and no vertex repeats; with
/// `require_saturate_a`, additionally that every A-vertex is matched.
pub fn validate_matching(
    graph: &BipartiteGraph,
    matching: &Matching,
    require_saturate_a: bool,
) -> Result<(), MatchingError> {
    let mut used_a = vec![false; graph.size_a()];
    let mut used_b = vec![false; graph.size_b()];
    for &(a, b) in matching.pairs() {
        if !graph.has_edge(a, b) {
            return Err(MatchingError::NotAnEdge { a, b });
        }
        if used_a[a] {
            return Err(MatchingError::ReusedA { vertex: a });
        }
        if used_b[b] {
            return Err(MatchingError::ReusedB { vertex: b });
        }
        used_a[a] = true;
        used_b[b] = true;
    }
    if require_saturate_a && matching.len() != graph.size_a() {
        return Err(MatchingError::NotSaturating {
            matched: matching.len(),
            required: graph.size_a(),
        });
    }
    Ok(())
}

/// Converts a transversal of the neighborhood family into the matching
/// that pairs each A-vertex with its chosen neighbor.
///
/// The transversal is re-validated against `graph.neighbor_family()`;
/// the result saturates A and is vertex-disjoint by the transversal's
/// membership and distinctness guarantees.
pub fn matching_from_transversal(
    graph: &BipartiteGraph,
    transversal: &Transversal,
) -> Result<Matching, TransversalError> {
    let pencils = graph.neighbor_family();
    validate_transversal(&pencils, &transversal.to_assignment())?;
    let pairs = transversal
        .choices()
        .iter()
        .enumerate()
        .map(|(a, &b)| (a, b as usize))
        .collect();
    Ok(Matching::new(pairs))
}
