use proptest::prelude::*;

use trigraph_kit::antithicken::{
    collect_maximal_schposcs, contract_pairs, optimal_antithickening, verify_thickening, AntithickenOptions,
};
use trigraph_kit::format::{parse_map, parse_trigraph, serialize_map, serialize_trigraph};
use trigraph_kit::gen::{gen_random_laminar_base, gen_random_trigraph, random_recoverable_spec, thicken};
use trigraph_kit::oracle::{self, ISOMORPHISM_CAP};
use trigraph_kit::schposc::schposc;
use trigraph_kit::structure::is_square_connected;
use trigraph_kit::{Adjacency, Error, Trigraph};

/// Arbitrary trigraphs, connected or not: a value per pair, with semi
/// values dropped once an endpoint already has a semiedge.
fn any_trigraph(max_n: usize) -> impl Strategy<Value = Trigraph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(0u8..5, n * (n - 1) / 2).prop_map(move |codes| {
            let mut used = vec![false; n];
            let mut k = 0;
            let mut values = vec![Adjacency::StrongAnti; n * n];
            for u in 0..n {
                for v in u + 1..n {
                    values[u * n + v] = match codes[k] {
                        0 if !used[u] && !used[v] => {
                            used[u] = true;
                            used[v] = true;
                            Adjacency::Semi
                        }
                        1 | 2 => Adjacency::Strong,
                        _ => Adjacency::StrongAnti,
                    };
                    k += 1;
                }
            }
            Trigraph::from_fn(n, |u, v| values[u * n + v]).unwrap()
        })
    })
}

fn connected_trigraph() -> impl Strategy<Value = Trigraph> {
    (4usize..=12, any::<u64>()).prop_map(|(n, seed)| gen_random_trigraph(n, seed).unwrap())
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn text_round_trip(g in any_trigraph(12)) {
        let text = serialize_trigraph(&g);
        prop_assert_eq!(parse_trigraph(&text).unwrap(), g);
    }

    #[test]
    fn complement_is_an_involution(g in any_trigraph(10)) {
        prop_assert_eq!(g.complement().complement(), g.clone());
        prop_assert_eq!(g.complement().semiedges().collect::<Vec<_>>(), g.semiedges().collect::<Vec<_>>());
    }

    #[test]
    fn grown_pairs_are_square_connected(g in connected_trigraph()) {
        for (u, v) in g.strong_pairs() {
            if let Some(p) = schposc(&g, u, v).unwrap() {
                prop_assert!(p.a().contains(u) && p.a().contains(v));
                prop_assert!(is_square_connected(&g, &p).unwrap());
                prop_assert_eq!(schposc(&g, v, u).unwrap(), Some(p));
            }
        }
    }

    #[test]
    fn growth_commutes_with_relabelling(
        (g, perm) in connected_trigraph().prop_flat_map(|g| { let n = g.n(); (Just(g), permutation(n)) })
    ) {
        let h = g.relabel(&perm).unwrap();
        for (u, v) in g.strong_pairs() {
            let mapped = schposc(&g, u, v).unwrap().map(|p| {
                let side = |s: &trigraph_kit::VertexSet| s.iter().map(|x| perm[x]).collect::<trigraph_kit::VertexSet>();
                (side(p.a()), side(p.b()))
            });
            let direct = schposc(&h, perm[u], perm[v]).unwrap().map(|p| (p.a().clone(), p.b().clone()));
            prop_assert_eq!(mapped, direct);
        }
    }

    #[test]
    fn collected_pairs_are_disjoint(g in connected_trigraph()) {
        if let Ok(pairs) = collect_maximal_schposcs(&g) {
            let mut seen = vec![false; g.n()];
            for p in &pairs {
                prop_assert!(is_square_connected(&g, p).unwrap());
                for v in p.vertices().iter() {
                    prop_assert!(!std::mem::replace(&mut seen[v], true));
                }
            }
            let (reduced, map) = contract_pairs(&g, &pairs).unwrap();
            prop_assert!(verify_thickening(&reduced, &map, &g).unwrap());
        }
    }

    #[test]
    fn forced_pipeline_is_sound_or_reports_structure(g in connected_trigraph()) {
        let opts = AntithickenOptions { force: true, recheck: true };
        match optimal_antithickening(&g, opts) {
            Ok(r) => prop_assert!(verify_thickening(&r.reduced, &r.map, &g).unwrap()),
            Err(Error::DegenerateStructure(_)) => prop_assert!(g.classify().degenerate),
            Err(e) => prop_assert!(false, "unexpected error {}", e),
        }
    }

    #[test]
    fn relabelling_preserves_the_result(
        (g, perm) in (5usize..=8, 0u64..5000)
            .prop_map(|(n, seed)| {
                let base = gen_random_laminar_base(n, seed).unwrap();
                thicken(&base, &random_recoverable_spec(&base, seed).unwrap()).unwrap().graph
            })
            .prop_flat_map(|g| { let n = g.n(); (Just(g), permutation(n)) })
    ) {
        if g.is_connected() && !g.classify().degenerate {
            let r1 = optimal_antithickening(&g, AntithickenOptions::default()).unwrap();
            let r2 = optimal_antithickening(&g.relabel(&perm).unwrap(), AntithickenOptions::default()).unwrap();
            prop_assert_eq!(r1.contracted_pairs.len(), r2.contracted_pairs.len());
            prop_assert!(oracle::are_isomorphic(&r1.reduced, &r2.reduced, ISOMORPHISM_CAP).unwrap());
        }
    }

    #[test]
    fn thickening_round_trip(n in 5usize..=9, seed in 0u64..5000) {
        let base = gen_random_laminar_base(n, seed).unwrap();
        let spec = random_recoverable_spec(&base, seed).unwrap();
        let t = thicken(&base, &spec).unwrap();
        prop_assert!(verify_thickening(&base, &t.map, &t.graph).unwrap());
        prop_assert_eq!(parse_map(&serialize_map(&t.map)).unwrap(), t.map.clone());
        if t.graph.is_connected() && !t.graph.classify().degenerate {
            let r = optimal_antithickening(&t.graph, AntithickenOptions::default()).unwrap();
            let cap = base.n().max(ISOMORPHISM_CAP);
            prop_assert!(oracle::are_isomorphic(&r.reduced, &base, cap).unwrap());
        }
    }
}
