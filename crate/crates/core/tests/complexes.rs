use latticemill::bits::Bits;
use latticemill::graphs::{bipartite_g2, build_gp, clique_complex, clique_vector, complement, SimpleGraph};
use latticemill::io::{parse_complex, parse_graph, parse_poset, write_complex, write_graph, write_poset};
use latticemill::monomial::{
    complex_of_ideal, edge_ideal, graded_standard_count, hibi_ideal, stanley_reisner_ideal, standard_monomial_count,
    MonomialIdeal,
};
use latticemill::poset::random_poset;
use latticemill::simplicial::{
    alexander_dual, dual_f_vector_formula, f_vector, f_vector_by_enumeration, is_flag, minimal_nonfaces,
    SimplicialComplex,
};
use latticemill::Int;
use proptest::prelude::*;

fn graph() -> impl Strategy<Value = SimpleGraph> {
    (0usize..=10).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let count = pairs.len();
        proptest::collection::vec(any::<bool>(), count).prop_map(move |keep| {
            let edges: Vec<(usize, usize)> =
                pairs.iter().zip(&keep).filter(|(_, k)| **k).map(|(e, _)| *e).collect();
            SimpleGraph::from_edges(n, &edges).unwrap()
        })
    })
}

fn complex(max_n: usize) -> impl Strategy<Value = SimplicialComplex> {
    (1usize..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(0u128..1 << n, 1..7)
            .prop_map(move |facets| SimplicialComplex::from_facets(n, facets.into_iter().map(Bits).collect()).unwrap())
    })
}

fn ideal(max_n: usize) -> impl Strategy<Value = MonomialIdeal> {
    (1usize..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(1u128..1 << n, 0..6)
            .prop_map(move |gens| MonomialIdeal::new(n, gens.into_iter().map(Bits).collect()).unwrap())
    })
}

fn naive_clique_counts(g: &SimpleGraph) -> Vec<i64> {
    let mut counts = vec![0i64; g.vertex_count() + 1];
    for s in Bits::full(g.vertex_count()).subsets() {
        if g.is_clique(s) {
            counts[s.len()] += 1;
        }
    }
    while counts.len() > 1 && counts.last() == Some(&0) {
        counts.pop();
    }
    counts
}

fn naive_minimal_nonfaces(c: &SimplicialComplex) -> Vec<Bits> {
    let mut out: Vec<Bits> = c
        .ground()
        .subsets()
        .filter(|s| !c.is_face(*s) && s.iter().all(|v| c.is_face(s.without(v))))
        .collect();
    out.sort_by_key(|s| s.canonical_key());
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn clique_counts_match_subset_scan(g in graph()) {
        let fast = clique_vector::<i64>(&g);
        prop_assert_eq!(fast.entries().to_vec(), naive_clique_counts(&g));
    }

    #[test]
    fn clique_complex_faces_are_cliques(g in graph()) {
        let delta = clique_complex(&g);
        prop_assert_eq!(f_vector::<i64>(&delta).entries().to_vec(), clique_vector::<i64>(&g).entries().to_vec());
        prop_assert!(is_flag(&delta));
        for facet in delta.facets() {
            prop_assert!(g.is_clique(*facet));
            prop_assert!((0..g.vertex_count()).all(|v| facet.contains(v) || !g.is_clique(facet.with(v))));
        }
    }

    #[test]
    fn edge_ideal_of_complement_is_clique_ideal(g in graph()) {
        prop_assert_eq!(edge_ideal(&complement(&g)), stanley_reisner_ideal(&clique_complex(&g)));
    }

    #[test]
    fn dual_of_hibi_complex_is_comparability_ideal(p in 1usize..=6, seed in any::<u64>()) {
        let poset = random_poset(p, seed);
        let dual = alexander_dual(&complex_of_ideal(&hibi_ideal(&poset)).unwrap()).unwrap();
        prop_assert_eq!(stanley_reisner_ideal(&dual), edge_ideal(&bipartite_g2(&poset)));
        prop_assert_eq!(complement(&build_gp(&poset)), bipartite_g2(&poset));
    }

    #[test]
    fn f_vector_methods_agree(c in complex(14)) {
        prop_assert_eq!(f_vector::<i64>(&c), f_vector_by_enumeration::<i64>(&c));
        let wide: Vec<Int> = f_vector::<i64>(&c).entries().iter().map(|&x| Int::from(x)).collect();
        prop_assert_eq!(f_vector::<Int>(&c).entries().to_vec(), wide);
    }

    #[test]
    fn minimal_nonfaces_match_subset_scan(c in complex(10)) {
        prop_assert_eq!(minimal_nonfaces(&c), naive_minimal_nonfaces(&c));
    }

    #[test]
    fn dual_formula_matches_direct_dual(c in complex(14)) {
        prop_assume!(!c.is_full_simplex());
        let formula = dual_f_vector_formula(&f_vector::<Int>(&c), c.ground_size()).unwrap();
        let direct = f_vector::<Int>(&alexander_dual(&c).unwrap());
        prop_assert_eq!(formula, direct);
    }

    #[test]
    fn alexander_duality_is_an_involution(c in complex(12)) {
        prop_assume!(!c.is_full_simplex());
        let dual = alexander_dual(&c).unwrap();
        prop_assert_eq!(alexander_dual(&dual).unwrap(), c);
    }

    #[test]
    fn ideal_round_trip(i in ideal(10)) {
        let back = stanley_reisner_ideal(&complex_of_ideal(&i).unwrap());
        prop_assert_eq!(back, i);
    }

    #[test]
    fn graded_sums_to_cumulative(i in ideal(8)) {
        let mut running = 0i64;
        for t in 0..=12 {
            running += graded_standard_count::<i64>(&i, t);
            prop_assert_eq!(running, standard_monomial_count::<i64>(&i, t));
        }
    }

    #[test]
    fn text_formats_round_trip(c in complex(12), g in graph(), p in 0usize..=9, seed in any::<u64>()) {
        prop_assert_eq!(parse_complex(&write_complex(&c)).unwrap(), c);
        prop_assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
        let poset = random_poset(p, seed);
        prop_assert_eq!(parse_poset(&write_poset(&poset)).unwrap(), poset);
    }
}
