use latticemill::bits::Bits;
use latticemill::graphs::{build_gp, clique_vector};
use latticemill::poset::{
    boolean_interval_counts, enumerate_posets, interval_is_boolean, order_ideals, random_poset, sperner_number,
    DistributiveLattice, Poset,
};
use proptest::prelude::*;

fn census_by_intervals(lattice: &DistributiveLattice) -> Vec<i64> {
    let mut counts = Vec::new();
    for &lo in lattice.elements() {
        for &hi in lattice.elements() {
            if let Some(rank) = interval_is_boolean(lattice, lo, hi) {
                if counts.len() <= rank {
                    counts.resize(rank + 1, 0);
                }
                counts[rank] += 1;
            }
        }
    }
    counts
}

fn brute_force_width(poset: &Poset) -> usize {
    poset
        .ground()
        .subsets()
        .filter(|s| poset.is_antichain(*s))
        .map(|s| s.len())
        .max()
        .unwrap_or(0)
}

fn brute_force_ideals(poset: &Poset) -> Vec<Bits> {
    let mut ideals: Vec<Bits> = poset
        .ground()
        .subsets()
        .filter(|s| s.iter().all(|a| poset.down_set(a).is_subset(*s)))
        .collect();
    ideals.sort_by_key(|s| s.canonical_key());
    ideals
}

fn small_poset() -> impl Strategy<Value = Poset> {
    (0usize..=8, any::<u64>()).prop_map(|(p, seed)| random_poset(p, seed))
}

#[test]
fn census_matches_interval_oracle_exhaustively() {
    for p in 0..=5 {
        for poset in enumerate_posets(p).unwrap() {
            let lattice = order_ideals(&poset);
            let fast = boolean_interval_counts::<i64>(&lattice, &poset);
            assert_eq!(fast.counts(), census_by_intervals(&lattice).as_slice(), "{poset:?}");
        }
    }
}

#[test]
fn enumeration_counts() {
    let counts: Vec<usize> = (0..=5).map(|p| enumerate_posets(p).unwrap().len()).collect();
    assert_eq!(counts, vec![1, 1, 3, 19, 219, 4231]);
}

#[test]
fn truncation_at_sperner_number_is_immaterial() {
    // The interval oracle never sees the poset, so any rank above the width
    // it reports would make the truncated sum in the clique identity wrong.
    for p in 0..=4 {
        for poset in enumerate_posets(p).unwrap() {
            let counts = census_by_intervals(&order_ideals(&poset));
            assert_eq!(counts.len(), sperner_number(&poset) + 1);
        }
    }
    for seed in 0..40 {
        let poset = random_poset(6, seed);
        let counts = census_by_intervals(&order_ideals(&poset));
        assert_eq!(counts.len(), sperner_number(&poset) + 1, "{poset:?}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn ideals_form_a_sublattice(poset in small_poset()) {
        let lattice = order_ideals(&poset);
        prop_assert!(lattice.contains(Bits::EMPTY));
        prop_assert!(lattice.contains(poset.ground()));
        for &a in lattice.elements() {
            for &b in lattice.elements() {
                prop_assert!(lattice.contains(a.union(b)));
                prop_assert!(lattice.contains(a.intersection(b)));
            }
        }
    }

    #[test]
    fn ideals_match_subset_filter(poset in small_poset()) {
        let lattice = order_ideals(&poset);
        prop_assert_eq!(lattice.elements().to_vec(), brute_force_ideals(&poset));
    }

    #[test]
    fn census_matches_interval_oracle_at_six(seed in any::<u64>()) {
        let poset = random_poset(6, seed);
        let lattice = order_ideals(&poset);
        let fast = boolean_interval_counts::<i64>(&lattice, &poset);
        let oracle = census_by_intervals(&lattice);
        prop_assert_eq!(fast.counts(), oracle.as_slice());
    }

    #[test]
    fn census_totals(poset in small_poset()) {
        let lattice = order_ideals(&poset);
        let census = boolean_interval_counts::<i64>(&lattice, &poset);
        prop_assert_eq!(census.get(0), lattice.len() as i64);
        let antichain_gaps = lattice
            .elements()
            .iter()
            .flat_map(|&i| lattice.elements().iter().map(move |&k| (i, k)))
            .filter(|&(i, k)| i.is_subset(k) && poset.is_antichain(k.difference(i)))
            .count() as i64;
        prop_assert_eq!(census.counts().iter().sum::<i64>(), antichain_gaps);
        let k = sperner_number(&poset);
        prop_assert_eq!(census.top_rank(), k);
        prop_assert!((k + 1..=poset.len() + 1).all(|m| census.get(m) == 0));
    }

    #[test]
    fn sperner_number_matches_brute_force(p in 0usize..=15, seed in any::<u64>()) {
        let poset = random_poset(p, seed);
        prop_assert_eq!(sperner_number(&poset), brute_force_width(&poset));
    }

    #[test]
    fn gp_is_a_simple_graph_with_clique_number_p(poset in small_poset()) {
        let p = poset.len();
        let g = build_gp(&poset);
        prop_assert_eq!(g.vertex_count(), 2 * p);
        for u in 0..2 * p {
            prop_assert!(!g.has_edge(u, u));
            for v in 0..2 * p {
                prop_assert_eq!(g.has_edge(u, v), g.has_edge(v, u));
            }
        }
        for i in 0..p {
            for j in 0..p {
                prop_assert_eq!(g.has_edge(i, p + j), !poset.leq(i, j));
            }
        }
        let cliques = clique_vector::<i64>(&g);
        prop_assert_eq!(cliques.get(0), 2 * p as i64);
        if p > 0 {
            prop_assert_eq!(cliques.clique_number(), p);
        }
    }

    #[test]
    fn random_posets_are_partial_orders(poset in small_poset()) {
        let p = poset.len();
        for a in 0..p {
            prop_assert!(poset.leq(a, a));
            for b in 0..p {
                if a != b && poset.leq(a, b) {
                    prop_assert!(!poset.leq(b, a));
                }
                for c in 0..p {
                    if poset.leq(a, b) && poset.leq(b, c) {
                        prop_assert!(poset.leq(a, c));
                    }
                }
            }
        }
        let rebuilt = Poset::from_cover_relations(p, &poset.covers()).unwrap();
        prop_assert_eq!(rebuilt, poset);
    }
}
