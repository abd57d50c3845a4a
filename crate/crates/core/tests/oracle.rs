//! The pruned enumerators and the isomorphism test against brute force.

mod common;

use common::{census_up_to, graph_from_bits, naive_isomorphic, to_set, to_vs, Naive, Set};
use irgraph::irredundance::{
    external_private_neighbors, is_dominating, is_irredundant, is_maximal_irredundant,
    lower_irredundance, private_neighbors, upper_irredundance,
};
use irgraph::{are_isomorphic, Graph, VertexSet};
use proptest::prelude::*;

fn assert_matches_oracle(g: &Graph) {
    let naive = Naive::new(g);
    let (ir, upper, sets) = naive.irredundance();
    let (got_upper, got_sets) = upper_irredundance(g);
    let (got_ir, witness) = lower_irredundance(g);
    let g6 = irgraph::emit_graph6(g);
    assert_eq!(got_upper, upper, "IR of {g6}");
    assert_eq!(got_ir, ir, "ir of {g6}");
    assert_eq!(got_sets.iter().map(|&s| to_set(s)).collect::<Vec<Set>>(), sets, "IR-sets of {g6}");
    assert_eq!(witness.len(), ir);
    assert!(naive.maximal_irredundant(&to_set(witness), &naive.subsets()), "ir witness of {g6}");
}

#[test]
fn census_up_to_six_matches_brute_force() {
    let graphs = census_up_to(6);
    assert_eq!(graphs.len(), 1 + 2 + 4 + 11 + 34 + 156);
    for g in &graphs {
        assert_matches_oracle(g);
    }
}

#[test]
fn predicates_match_brute_force_on_every_subset() {
    for g in census_up_to(5) {
        let naive = Naive::new(&g);
        let all = naive.subsets();
        for s in &all {
            let d = to_vs(s);
            assert_eq!(is_irredundant(&g, d), naive.irredundant(s));
            assert_eq!(is_dominating(&g, d), naive.dominating(s));
            assert_eq!(is_maximal_irredundant(&g, d), naive.maximal_irredundant(s, &all));
            for &v in s {
                assert_eq!(to_set(private_neighbors(&g, d, v).unwrap()), naive.pn(s, v));
                assert_eq!(to_set(external_private_neighbors(&g, d, v).unwrap()), naive.epn(s, v));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn random_graphs_match_brute_force(n in 0usize..=9, bits in any::<u64>()) {
        assert_matches_oracle(&graph_from_bits(n, bits));
    }

    #[test]
    fn private_neighbours_match(n in 1usize..=11, bits in any::<u64>(), set in any::<u16>()) {
        let g = graph_from_bits(n, bits);
        let d = VertexSet::from_bits(u128::from(set)).intersection(g.vertices());
        let naive = Naive::new(&g);
        let s = to_set(d);
        for v in d {
            prop_assert_eq!(to_set(private_neighbors(&g, d, v).unwrap()), naive.pn(&s, v));
        }
        prop_assert_eq!(is_irredundant(&g, d), naive.irredundant(&s));
    }

    #[test]
    fn isomorphism_matches_brute_force(n in 0usize..=6, a in any::<u64>(), b in any::<u64>()) {
        let (g, h) = (graph_from_bits(n, a), graph_from_bits(n, b));
        prop_assert_eq!(are_isomorphic(&g, &h).unwrap(), naive_isomorphic(&g, &h));
    }
}
