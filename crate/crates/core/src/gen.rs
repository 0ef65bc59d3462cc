//! Seeded instance generators.
//!
//! Three sources of instances: random families with exact set size and
//! capped pairwise intersections (rejection sampling), projective-plane
//! incidence graphs over prime fields (canonically ordered, so the
//! same order always yields the identical graph), and plane restrictions
//! engineered to sit just above the saturating-matching degree bound.

use alloc::vec::Vec;
use core::f64::consts::E;
use thiserror::Error;

use crate::family::{intersection_size, SetFamily};
use crate::graph::BipartiteGraph;
use crate::lll::holds_with_tolerance;
use crate::rng::Rng;

/// Retries allowed per set before [`gen_family`] gives up.
pub const SET_RETRY_LIMIT: u32 = 10_000;

/// A prime order for projective-plane construction.
///
/// Prime powers are deliberately out: the field is the integers mod q.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PlaneOrder(u32);

impl PlaneOrder {
    pub fn new(q: u32) -> Result<Self, GenError> {
        if q < 2 || !is_prime(q) {
            return Err(GenError::NotPrime { q });
        }
        Ok(PlaneOrder(q))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    /// Number of points (equally, lines): `q² + q + 1`.
    pub fn point_count(self) -> usize {
        let q = self.0 as usize;
        q * q + q + 1
    }
}

fn is_prime(q: u32) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= q as u64 {
        if q.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Instance generation failures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("{q} is not prime; plane construction needs a prime order")]
    NotPrime { q: u32 },
    #[error("universe {universe} is smaller than the set size {set_size}")]
    UniverseTooSmall { set_size: usize, universe: u64 },
    #[error("{n} disjoint sets of size {set_size} need a universe of at least {}, got {universe}", *n as u128 * *set_size as u128)]
    InfeasibleDisjoint { n: usize, set_size: usize, universe: u64 },
    #[error(
        "{n} sets of size {set_size} with pairwise intersections at most 1 cover {} element pairs, \
         but universe {universe} only has {}",
        *n as u128 * (*set_size as u128) * (set_size.saturating_sub(1) as u128) / 2,
        *universe as u128 * (universe.saturating_sub(1) as u128) / 2
    )]
    InfeasiblePairs { n: usize, set_size: usize, universe: u64 },
    #[error("gave up on set {index} after {limit} redraws against the intersection cap")]
    RetryLimitExceeded { index: usize, limit: u32 },
    #[error("requested {requested} points but the plane only has {available}")]
    TooManyPoints { requested: usize, available: usize },
    #[error("degree bound fails for {requested} points; largest feasible count is {max_feasible}")]
    DegreeBoundInfeasible { requested: usize, max_feasible: usize },
}

/// Generates `n` sets of size exactly `set_size` over `0..universe`
/// with every pairwise intersection at most `max_overlap`.
///
/// Each set is drawn uniformly and redrawn while it overlaps an earlier
/// set beyond the cap, up to [`SET_RETRY_LIMIT`] redraws. Cheap
/// counting bounds reject impossible parameters up front; tight-but-
/// possible parameters may still exhaust the retry limit.
pub fn gen_family(
    n: usize,
    set_size: usize,
    max_overlap: usize,
    universe: u64,
    seed: u64,
) -> Result<SetFamily, GenError> {
    if (set_size as u64) > universe {
        return Err(GenError::UniverseTooSmall { set_size, universe });
    }
    if max_overlap == 0 && (n as u128) * (set_size as u128) > universe as u128 {
        return Err(GenError::InfeasibleDisjoint { n, set_size, universe });
    }
    if max_overlap == 1 {
        let pairs_needed = n as u128 * (set_size as u128) * (set_size.saturating_sub(1) as u128) / 2;
        let pairs_available = universe as u128 * (universe.saturating_sub(1) as u128) / 2;
        if pairs_needed > pairs_available {
            return Err(GenError::InfeasiblePairs { n, set_size, universe });
        }
    }
    let mut rng = Rng::seed_from(seed);
    let mut sets: Vec<Vec<u64>> = Vec::with_capacity(n);
    for index in 0..n {
        let mut retries = 0u32;
        loop {
            let candidate = draw_subset(&mut rng, universe, set_size);
            if sets.iter().all(|s| intersection_size(s, &candidate) <= max_overlap) {
                sets.push(candidate);
                break;
            }
            retries += 1;
            if retries >= SET_RETRY_LIMIT {
                return Err(GenError::RetryLimitExceeded { index, limit: SET_RETRY_LIMIT });
            }
        }
    }
    Ok(SetFamily::new(sets))
}

/// Uniform random `size`-subset of `0..universe`, sorted.
fn draw_subset(rng: &mut Rng, universe: u64, size: usize) -> Vec<u64> {
    debug_assert!(size as u64 <= universe);
    let mut picked: Vec<u64>;
    if universe <= 4 * size as u64 {
        // Dense draw: partial Fisher–Yates over the materialized range.
        let mut pool: Vec<u64> = (0..universe).collect();
        for k in 0..size {
            let j = k + rng.next_below(universe - k as u64) as usize;
            pool.swap(k, j);
        }
        pool.truncate(size);
        picked = pool;
    } else {
        // Sparse draw: rejection; collisions are rare at this density.
        picked = Vec::with_capacity(size);
        while picked.len() < size {
            let x = rng.next_below(universe);
            if !picked.contains(&x) {
                picked.push(x);
            }
        }
    }
    picked.sort_unstable();
    picked
}

/// Incidence graph of the projective plane of prime order `q`.
///
/// A-vertices are the points and B-vertices the lines, both as
/// normalized homogeneous triples over the integers mod q (first
/// nonzero coordinate 1) in lexicographic order; point `p` lies on line
/// `L` iff `p·L ≡ 0 (mod q)`. The graph is `(q+1)`-regular on both
/// sides with `(q²+q+1)(q+1)` edges, and any two points share exactly
/// one line, so it is C4-free.
pub fn gen_plane_incidence(order: PlaneOrder) -> BipartiteGraph {
    let q = order.get() as u64;
    let triples = normalized_triples(q);
    let count = triples.len();
    debug_assert_eq!(count, order.point_count());
    let mut edges = Vec::with_capacity(count * (q as usize + 1));
    for (p, point) in triples.iter().enumerate() {
        for (l, line) in triples.iter().enumerate() {
            let dot = point[0] * line[0] + point[1] * line[1] + point[2] * line[2];
            if dot % q == 0 {
                edges.push((p, l));
            }
        }
    }
    BipartiteGraph::new(count, count, edges).expect("incidence edges are in range and unique")
}

/// Canonical projective points over the field of `q` elements: all
/// triples with first nonzero coordinate 1, lexicographically sorted.
fn normalized_triples(q: u64) -> Vec<[u64; 3]> {
    let mut triples = Vec::new();
    triples.push([0, 0, 1]);
    for z in 0..q {
        triples.push([0, 1, z]);
    }
    for y in 0..q {
        for z in 0..q {
            triples.push([1, y, z]);
        }
    }
    triples
}

/// Restriction of the order-q plane to its first `size_a` points versus
/// all lines: every kept point retains degree `q+1`, the graph stays
/// C4-free, and the preconditions guarantee the saturation condition
/// holds (`(q+1)² ≥ 2e·size_a`).
pub fn gen_threshold_instance(order: PlaneOrder, size_a: usize) -> Result<BipartiteGraph, GenError> {
    let available = order.point_count();
    if size_a > available {
        return Err(GenError::TooManyPoints { requested: size_a, available });
    }
    let degree = order.get() as u64 + 1;
    let degree_squared = (degree * degree) as f64;
    if !holds_with_tolerance(2.0 * E * size_a as f64, degree_squared) {
        let max_feasible = libm::floor(degree_squared / (2.0 * E)) as usize;
        return Err(GenError::DegreeBoundInfeasible { requested: size_a, max_feasible });
    }
    let plane = gen_plane_incidence(order);
    let edges = plane
        .edges()
        .iter()
        .copied()
        .filter(|&(a, _)| a < size_a)
        .collect();
    Ok(BipartiteGraph::new(size_a, available, edges).expect("restriction of a valid graph"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c4::{check_saturation_condition, is_c4_free};
    use crate::oracle::max_matching;

    #[test]
    fn prime_orders_only() {
        assert!(PlaneOrder::new(2).is_ok());
        assert!(PlaneOrder::new(13).is_ok());
        for q in [0, 1, 4, 6, 9, 15] {
            assert_eq!(PlaneOrder::new(q).unwrap_err(), GenError::NotPrime { q });
        }
    }

    #[test]
    fn smallest_plane_is_the_fano_incidence() {
        let g = gen_plane_incidence(PlaneOrder::new(2).unwrap());
        assert_eq!((g.size_a(), g.size_b()), (7, 7));
        assert_eq!(g.edge_count(), 21);
        for a in 0..7 {
            assert_eq!(g.degree_a(a), 3);
        }
        assert!(is_c4_free(&g));
        // Any two lines of a projective plane meet in exactly one point.
        let stats = g.neighbor_family().stats();
        assert_eq!(stats.min_size, Some(3));
        assert_eq!(stats.max_overlap, 1);
    }

    #[test]
    fn order_three_plane_dimensions() {
        let g = gen_plane_incidence(PlaneOrder::new(3).unwrap());
        assert_eq!((g.size_a(), g.size_b()), (13, 13));
        assert_eq!(g.edge_count(), 52);
        for a in 0..13 {
            assert_eq!(g.degree_a(a), 4);
        }
    }

    #[test]
    fn planes_are_regular_and_c4_free() {
        for q in [2u32, 3, 5, 7, 11, 13] {
            let order = PlaneOrder::new(q).unwrap();
            let g = gen_plane_incidence(order);
            let count = order.point_count();
            assert_eq!((g.size_a(), g.size_b()), (count, count));
            assert_eq!(g.edge_count(), count * (q as usize + 1));
            let mut degree_b = alloc::vec![0usize; count];
            for a in 0..count {
                assert_eq!(g.degree_a(a), q as usize + 1, "q={q} point {a}");
                for &b in g.neighbors_a(a) {
                    degree_b[b] += 1;
                }
            }
            assert!(degree_b.iter().all(|&d| d == q as usize + 1), "q={q}");
            assert!(is_c4_free(&g), "q={q}");
        }
    }

    #[test]
    fn family_of_disjoint_singletons() {
        let f = gen_family(3, 1, 0, 3, 11).unwrap();
        let stats = f.stats();
        assert_eq!((stats.n, stats.min_size, stats.max_overlap), (3, Some(1), 0));
    }

    #[test]
    fn family_at_the_condition_threshold() {
        let f = gen_family(20, 11, 1, 400, 7).unwrap();
        let stats = f.stats();
        assert_eq!(stats.n, 20);
        assert_eq!(stats.min_size, Some(11));
        assert!(stats.max_overlap <= 1);
    }

    #[test]
    fn generated_families_revalidate() {
        for seed in 0..200u64 {
            let f = gen_family(8, 4, 1, 60, seed).unwrap();
            let stats = f.stats();
            assert_eq!(stats.min_size, Some(4));
            assert!(stats.max_overlap <= 1);
            assert!(f.sets().all(|s| s.len() == 4 && s.iter().all(|&x| x < 60)));
        }
    }

    #[test]
    fn generation_is_deterministic() {
        assert_eq!(gen_family(10, 5, 2, 50, 3), gen_family(10, 5, 2, 50, 3));
        assert_ne!(gen_family(10, 5, 2, 50, 3), gen_family(10, 5, 2, 50, 4));
    }

    #[test]
    fn infeasible_parameters_are_named() {
        assert_eq!(
            gen_family(2, 3, 0, 5, 0).unwrap_err(),
            GenError::InfeasibleDisjoint { n: 2, set_size: 3, universe: 5 }
        );
        assert_eq!(
            gen_family(1, 9, 0, 5, 0).unwrap_err(),
            GenError::UniverseTooSmall { set_size: 9, universe: 5 }
        );
        // 8 sets of size 4 cover 48 pairs; a 7-element universe has 21.
        assert_eq!(
            gen_family(8, 4, 1, 7, 0).unwrap_err(),
            GenError::InfeasiblePairs { n: 8, set_size: 4, universe: 7 }
        );
    }

    #[test]
    fn threshold_instance_at_the_margin() {
        let order = PlaneOrder::new(13).unwrap();
        let g = gen_threshold_instance(order, 36).unwrap();
        assert_eq!((g.size_a(), g.size_b()), (36, 183));
        for a in 0..36 {
            assert_eq!(g.degree_a(a), 14);
        }
        assert!(check_saturation_condition(&g).holds);
        assert_eq!(max_matching(&g).len(), 36);

        assert_eq!(
            gen_threshold_instance(order, 37).unwrap_err(),
            GenError::DegreeBoundInfeasible { requested: 37, max_feasible: 36 }
        );
    }

    #[test]
    fn threshold_instance_tiny_case() {
        let g = gen_threshold_instance(PlaneOrder::new(2).unwrap(), 1).unwrap();
        assert_eq!((g.size_a(), g.size_b()), (1, 7));
        assert_eq!(g.degree_a(0), 3);
        assert!(check_saturation_condition(&g).holds);
    }

    #[test]
    fn threshold_instance_rejects_oversized_a() {
        let order = PlaneOrder::new(2).unwrap();
        assert_eq!(
            gen_threshold_instance(order, 8).unwrap_err(),
            GenError::TooManyPoints { requested: 8, available: 7 }
        );
    }

    #[test]
    fn subset_draws_are_uniform_in_size_and_range() {
        let mut rng = Rng::seed_from(5);
        for _ in 0..500 {
            let s = draw_subset(&mut rng, 9, 4);
            assert_eq!(s.len(), 4);
            assert!(s.windows(2).all(|w| w[0] < w[1]));
            assert!(s.iter().all(|&x| x < 9));
            let t = draw_subset(&mut rng, 1000, 3);
            assert_eq!(t.len(), 3);
            assert!(t.windows(2).all(|w| w[0] < w[1]));
        }
    }
}
