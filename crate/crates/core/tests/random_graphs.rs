//! Randomized graph properties checked against brute-force oracles.

use transversal_core::{
    check_saturation_condition, find_c4, find_transversal, is_c4_free, matching_from_transversal,
    max_matching, solver::default_max_resamples, validate_matching, BipartiteGraph, Rng,
};

fn random_graph(rng: &mut Rng, max_a: usize, max_b: usize) -> BipartiteGraph {
    let size_a = 1 + rng.next_below(max_a as u64) as usize;
    let size_b = 1 + rng.next_below(max_b as u64) as usize;
    // Edge density between sparse and half-full.
    let keep_one_in = 2 + rng.next_below(3);
    let mut edges = Vec::new();
    for a in 0..size_a {
        for b in 0..size_b {
            if rng.next_below(keep_one_in) == 0 {
                edges.push((a, b));
            }
        }
    }
    BipartiteGraph::new(size_a, size_b, edges).unwrap()
}

/// Every 4-cycle, by definition: two vertices per side with all four
/// edges present.
fn brute_force_has_c4(g: &BipartiteGraph) -> bool {
    for a0 in 0..g.size_a() {
        for a1 in a0 + 1..g.size_a() {
            for b0 in 0..g.size_b() {
                for b1 in b0 + 1..g.size_b() {
                    if g.has_edge(a0, b0) && g.has_edge(a0, b1) && g.has_edge(a1, b0) && g.has_edge(a1, b1) {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Maximum matching size by branching over each A-vertex's options.
fn brute_force_max_matching(g: &BipartiteGraph, a: usize, used_b: &mut [bool]) -> usize {
    if a == g.size_a() {
        return 0;
    }
    let mut best = brute_force_max_matching(g, a + 1, used_b);
    for &b in g.neighbors_a(a) {
        if !used_b[b] {
            used_b[b] = true;
            best = best.max(1 + brute_force_max_matching(g, a + 1, used_b));
            used_b[b] = false;
        }
    }
    best
}

#[test]
fn c4_detection_agrees_with_enumeration() {
    let mut rng = Rng::seed_from(0xC4C4);
    for _ in 0..200 {
        let g = random_graph(&mut rng, 7, 7);
        let brute = brute_force_has_c4(&g);
        match find_c4(&g) {
            None => assert!(!brute),
            Some(w) => {
                assert!(brute);
                assert!(w.a0 < w.a1 && w.b0 < w.b1);
                for (a, b) in [(w.a0, w.b0), (w.a0, w.b1), (w.a1, w.b0), (w.a1, w.b1)] {
                    assert!(g.has_edge(a, b));
                }
            }
        }
    }
}

#[test]
fn c4_freeness_equals_overlap_at_most_one() {
    let mut rng = Rng::seed_from(0x0F0F);
    for _ in 0..500 {
        let g = random_graph(&mut rng, 8, 8);
        let overlap = g.neighbor_family().stats().max_overlap;
        assert_eq!(is_c4_free(&g), overlap <= 1);
    }
}

#[test]
fn hopcroft_karp_is_maximum() {
    let mut rng = Rng::seed_from(0x3A7C);
    for _ in 0..300 {
        let g = random_graph(&mut rng, 6, 6);
        let m = max_matching(&g);
        assert_eq!(validate_matching(&g, &m, false), Ok(()));
        let mut used_b = vec![false; g.size_b()];
        assert_eq!(m.len(), brute_force_max_matching(&g, 0, &mut used_b));
    }
}

#[test]
fn any_transversal_of_the_neighborhoods_converts_to_a_saturating_matching() {
    let mut rng = Rng::seed_from(0x7A11);
    let mut converted = 0;
    for _ in 0..300 {
        let g = random_graph(&mut rng, 6, 8);
        let pencils = g.neighbor_family();
        if let Some(t) = transversal_core::find_transversal_exact(&pencils) {
            let m = matching_from_transversal(&g, &t).unwrap();
            assert_eq!(validate_matching(&g, &m, true), Ok(()));
            converted += 1;
        }
    }
    assert!(converted > 50, "only {converted} graphs had transversals; test is too weak");
}

#[test]
fn saturation_condition_feeds_both_pipelines() {
    // Wherever the saturation condition holds, the resampling pipeline
    // and the exact matcher must both produce A-saturating matchings,
    // and the transversal condition must hold for the neighborhoods.
    let mut rng = Rng::seed_from(0x5EED);
    let mut holding = 0;
    for _ in 0..400 {
        let g = random_graph(&mut rng, 5, 14);
        let report = check_saturation_condition(&g);
        if !report.holds {
            continue;
        }
        holding += 1;

        let pencils = g.neighbor_family();
        let condition = transversal_core::check_transversal_condition(&pencils.stats()).unwrap();
        assert!(condition.holds);

        let exact = max_matching(&g);
        assert_eq!(validate_matching(&g, &exact, true), Ok(()));

        let solved = find_transversal(&pencils, 1, default_max_resamples(pencils.len())).unwrap();
        let t = solved.transversal().expect("condition guarantees a transversal");
        let m = matching_from_transversal(&g, t).unwrap();
        assert_eq!(validate_matching(&g, &m, true), Ok(()));
    }
    assert!(holding > 20, "only {holding} instances held; test is too weak");
}
