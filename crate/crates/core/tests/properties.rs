use proptest::prelude::*;
use twisted_core::*;

fn edge_set(n: usize) -> impl Strategy<Value = EdgeSet> {
    let m = n * (n - 1) / 2;
    proptest::collection::vec(any::<bool>(), m).prop_map(move |mask| {
        let pairs = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j)));
        EdgeSet::from_pairs(n, pairs.zip(mask).filter(|(_, keep)| *keep).map(|(p, _)| p)).unwrap()
    })
}

fn sized_edge_set() -> impl Strategy<Value = EdgeSet> {
    (2usize..=12).prop_flat_map(edge_set)
}

fn pair_of_sets() -> impl Strategy<Value = (EdgeSet, EdgeSet)> {
    (2usize..=12).prop_flat_map(|n| (edge_set(n), edge_set(n)))
}

proptest! {
    #[test]
    fn ordering_matches_sorted_edge_lists((a, b) in pair_of_sets()) {
        let la: Vec<Edge> = a.iter().collect();
        let lb: Vec<Edge> = b.iter().collect();
        prop_assert_eq!(a.cmp(&b), la.cmp(&lb));
        prop_assert!(la.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn greedy_completion_is_a_maximal_superset(set in sized_edge_set()) {
        let tg = TwistedGraph::new(set.n()).unwrap();
        // Drop edges until plane, keeping the earliest ones.
        let mut plane = EdgeSet::new(set.n()).unwrap();
        for e in &set {
            if tg.is_plane(&plane.with(e)) {
                plane.insert(e);
            }
        }
        let done = tg.complete_to_maximal(&plane).unwrap();
        prop_assert!(tg.is_maximal_plane(done.edges()));
        prop_assert!(plane.is_subset(done.edges()));
        if !tg.is_plane(&set) {
            prop_assert_eq!(tg.complete_to_maximal(&set), Err(Error::NotPlane));
        }
    }

    #[test]
    fn set_algebra_is_consistent((a, b) in pair_of_sets()) {
        let union = a.union(&b);
        prop_assert_eq!(union.len(), a.len() + b.len() - a.intersection(&b).len());
        prop_assert_eq!(a.symmetric_difference(&b), union.difference(&a.intersection(&b)));
        prop_assert!(a.intersection(&b).is_subset(&a));
        prop_assert_eq!(a.complement().complement(), a);
    }
}
