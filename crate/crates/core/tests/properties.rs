//! Randomized invariants.

use frank::certificate::{verify_certificate, Certificate};
use frank::graph::{
    build_graph, canonical_form, enumerate_cubic_3ec, parse_graph6, write_graph6, FamilySpec, Graph,
};
use frank::orientation::Orientation;
use frank::solver::{cover_search, frank_number_exact, Budget, SearchOptions};
use frank::transforms::TransformSpec;
use proptest::prelude::*;
use proptest::sample::{select, subsequence};

fn simple_graph() -> impl Strategy<Value = Graph> {
    (1usize..=20).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let len = pairs.len();
        subsequence(pairs, 0..=len).prop_map(move |edges| build_graph(n, &edges).unwrap())
    })
}

fn small_cubic() -> impl Strategy<Value = Graph> {
    let graphs: Vec<Graph> = (4..=8)
        .step_by(2)
        .flat_map(|n| enumerate_cubic_3ec(n).unwrap())
        .collect();
    select(graphs)
}

fn permuted(g: Graph) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    let n = g.n();
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(move |perm| (g.clone(), perm))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn graph6_round_trip(g in simple_graph()) {
        let text = write_graph6(&g);
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn canonical_form_ignores_labels((g, perm) in small_cubic().prop_flat_map(permuted)) {
        let h = g.relabel(&perm);
        prop_assert_eq!(write_graph6(&canonical_form(&g).0), write_graph6(&canonical_form(&h).0));
    }

    #[test]
    fn frank_number_ignores_labels((g, perm) in small_cubic().prop_flat_map(permuted)) {
        let h = g.relabel(&perm);
        let a = frank_number_exact(&g, 3, &Budget::default()).unwrap();
        let b = frank_number_exact(&h, 3, &Budget::default()).unwrap();
        prop_assert_eq!(a.frank_number, b.frank_number);
        prop_assert_eq!(a.stats.sc_orientations, b.stats.sc_orientations);
        prop_assert_eq!(a.stats.max_deletable, b.stats.max_deletable);
    }

    #[test]
    fn reversal_is_an_involution(g in small_cubic(), bits in any::<u64>()) {
        let o = Orientation::from_u64(&g, bits & ((1u64 << g.m()) - 1));
        prop_assert_eq!(o.reverse().reverse().to_u64(), o.to_u64());
        prop_assert_eq!(o.reverse().is_strongly_connected(), o.is_strongly_connected());
        let colors = o.color_vertices();
        let reversed = o.reverse().color_vertices();
        prop_assert_eq!(colors.red, reversed.green);
    }

    #[test]
    fn search_is_seed_deterministic(g in small_cubic(), seed in 0u64..1000) {
        let opts = SearchOptions { k: 2, seed, ..SearchOptions::default() };
        let a = cover_search(&g, &opts).unwrap();
        let b = cover_search(&g, &opts).unwrap();
        prop_assert_eq!(&a.certificate, &b.certificate);
        prop_assert_eq!(a.winning_restart, b.winning_restart);
        let c = a.certificate.unwrap();
        prop_assert!(verify_certificate(&g, &c).valid);
        prop_assert_eq!(Certificate::from_json(&c.to_json()).unwrap(), c);
    }

    #[test]
    fn transform_spec_round_trip(v in 0usize..100, order in proptest::collection::vec(0usize..100, 3..6), t in proptest::array::uniform3(0usize..100)) {
        for spec in [
            TransformSpec::Truncate(v),
            TransformSpec::Lcm { vertex: v, order: None },
            TransformSpec::Lcm { vertex: v, order: Some(order.clone()) },
            TransformSpec::Contract(t),
        ] {
            prop_assert_eq!(spec.to_string().parse::<TransformSpec>().unwrap(), spec);
        }
    }

    #[test]
    fn family_spec_round_trip(n in 3usize..40, k in 1usize..19) {
        for spec in [
            FamilySpec::Wheel(n),
            FamilySpec::Prism(n),
            FamilySpec::Mobius(2 * n),
            FamilySpec::GeneralizedPetersen { n: 2 * k + 1, k },
            FamilySpec::Flower(2 * n + 1),
        ] {
            prop_assert_eq!(spec.to_string().parse::<FamilySpec>().unwrap(), spec);
        }
    }
}
