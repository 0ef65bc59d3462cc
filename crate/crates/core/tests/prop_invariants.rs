//! Structural invariants over generated inputs.

use proptest::collection::vec;
use proptest::prelude::*;
use transversal_core::{DependencyDigraph, SetFamily};

proptest! {
    #[test]
    fn every_event_has_two_n_minus_four_neighbors(n in 2usize..=50) {
        let d = DependencyDigraph::new(n).unwrap();
        prop_assert_eq!(d.event_count(), n * (n - 1) / 2);
        for e in 0..d.event_count() {
            prop_assert_eq!(d.neighbors(e).len(), 2 * n - 4);
        }
    }

    #[test]
    fn stats_bounds_are_tight(sets in vec(vec(0u64..40, 0..8), 0..8)) {
        let f = SetFamily::new(sets);
        let stats = f.stats();
        prop_assert_eq!(stats.n, f.len());
        match stats.min_size {
            None => prop_assert_eq!(stats.n, 0),
            Some(l) => {
                prop_assert!(f.sets().all(|s| s.len() >= l));
                prop_assert!(f.sets().any(|s| s.len() == l));
            }
        }
        // The overlap bound is attained by some pair when n ≥ 2.
        let mut attained = stats.n < 2;
        for i in 0..f.len() {
            for j in i + 1..f.len() {
                let inter = f.set(i).iter().filter(|x| f.set(j).contains(x)).count();
                prop_assert!(inter <= stats.max_overlap);
                attained |= inter == stats.max_overlap;
            }
        }
        prop_assert!(attained);
    }

    #[test]
    fn family_construction_is_idempotent(sets in vec(vec(0u64..20, 0..10), 0..6)) {
        let once = SetFamily::new(sets);
        let twice = SetFamily::new(once.sets().map(|s| s.to_vec()).collect());
        prop_assert_eq!(once, twice);
    }
}
