//! Fast paths checked against the brute-force oracle on every small
//! connected trigraph and on seeded samples.

use trigraph_kit::antithicken::{
    collect_maximal_schposcs, compose_thickenings, is_laminar, optimal_antithickening, verify_thickening,
    AntithickenOptions,
};
use trigraph_kit::gen::{gen_cliques_matching, gen_named, NamedFixture};
use trigraph_kit::oracle::{self, HposcKind, ANTITHICKENING_CAP, HPOSC_CAP};
use trigraph_kit::schposc::schposc;
use trigraph_kit::structure::{
    contains_square, is_deletion_minimal, is_hposc, is_homogeneous_set, is_square, is_square_connected, CliquePair,
};
use trigraph_kit::{Trigraph, VertexSet};

fn small() -> Vec<Trigraph> {
    let mut graphs = oracle::catalog_up_to(5).unwrap();
    graphs.extend(oracle::sampled_trigraphs(6, 300, 77).unwrap());
    graphs.extend(oracle::sampled_trigraphs(7, 300, 78).unwrap());
    graphs
}

fn fixtures() -> Vec<Trigraph> {
    let mut graphs: Vec<Trigraph> = NamedFixture::ALL.iter().map(|&f| gen_named(f)).collect();
    graphs.push(gen_cliques_matching(3).unwrap());
    graphs.push(gen_cliques_matching(4).unwrap());
    graphs
}

fn non_degenerate() -> Vec<Trigraph> {
    small().into_iter().filter(|g| !g.classify().degenerate).collect()
}

#[test]
fn classification_matches_enumeration() {
    for g in small().iter().chain(&fixtures()) {
        let mut fast = g.classify();
        fast.laminar = None;
        assert_eq!(fast, oracle::classify_by_enumeration(g, HPOSC_CAP).unwrap(), "{g:?}");
    }
}

#[test]
fn pair_predicates_match_enumeration() {
    for g in small().iter().chain(&fixtures()) {
        let all = oracle::enumerate_hposcs(g, HposcKind::All, HPOSC_CAP).unwrap();
        for p in &all {
            assert!(is_hposc(g, p), "{p} in {g:?}");
            let dm = oracle::pair_is(g, p, HposcKind::DeletionMinimal, HPOSC_CAP).unwrap();
            let sc = oracle::pair_is(g, p, HposcKind::SquareConnected, HPOSC_CAP).unwrap();
            assert_eq!(is_deletion_minimal(g, p), dm, "{p} in {g:?}");
            assert_eq!(is_square_connected(g, p).unwrap(), sc, "{p} in {g:?}");
            assert_eq!(is_square_connected(g, &p.swapped()).unwrap(), sc);
        }
        // nothing outside the enumeration passes the fast check
        let n = g.n();
        if n <= 5 {
            for a in 1u32..1 << n {
                for b in 1u32..1 << n {
                    if a & b != 0 || a.trailing_zeros() > b.trailing_zeros() {
                        continue;
                    }
                    let set = |m: u32| (0..n).filter(|&v| m >> v & 1 == 1).collect::<VertexSet>();
                    let p = CliquePair::new(set(a), set(b)).unwrap();
                    assert_eq!(is_hposc(g, &p), all.contains(&p), "{p} in {g:?}");
                }
            }
        }
    }
}

#[test]
fn squares_and_homogeneous_sets_match_enumeration() {
    for g in oracle::catalog_up_to(5).unwrap().iter().chain(&fixtures()) {
        let all: Vec<usize> = (0..g.n()).collect();
        let witness = contains_square(g, &all);
        if let Some(w) = witness {
            assert!(is_square(g, w).unwrap());
        }
        let any = oracle::enumerate_hposcs(g, HposcKind::All, HPOSC_CAP)
            .unwrap()
            .iter()
            .any(|p| contains_square(g, &p.vertices()).is_some());
        if any {
            assert!(witness.is_some());
        }
        let homogeneous = oracle::enumerate_homogeneous_sets(g, HPOSC_CAP).unwrap();
        for x in &homogeneous {
            assert!(is_homogeneous_set(g, x), "{x} in {g:?}");
        }
    }
}

/// Dropping any vertex other than the seeds from a grown pair leaves no
/// homogeneous pair with a square through both seeds.
#[test]
fn grown_pairs_are_minimal() {
    let square_through = |g: &Trigraph, p: &CliquePair, a0: usize, a1: usize| {
        let vs = p.vertices();
        vs.iter().any(|x| {
            vs.iter().any(|y| {
                [[a0, a1, x, y], [a0, x, a1, y], [a0, a1, y, x]]
                    .iter()
                    .any(|q| x != y && ![a0, a1].contains(&x) && ![a0, a1].contains(&y) && is_square(g, *q).unwrap())
            })
        })
    };
    let mut checked = 0;
    for g in small().iter().chain(&fixtures()) {
        for (a0, a1) in g.strong_pairs() {
            let Some(p) = schposc(g, a0, a1).unwrap() else { continue };
            assert!(p.a().contains(a0) && p.a().contains(a1));
            for v in p.vertices().iter().filter(|&v| v != a0 && v != a1) {
                let (mut a, mut b) = (p.a().clone(), p.b().clone());
                a.remove(v);
                b.remove(v);
                if a.is_empty() || b.is_empty() {
                    continue;
                }
                let q = CliquePair::new(a, b).unwrap();
                assert!(
                    !(is_hposc(g, &q) && square_through(g, &q, a0, a1)),
                    "{p} from ({a0},{a1}) shrinks to {q} in {g:?}"
                );
                checked += 1;
            }
        }
    }
    assert!(checked > 1000);
}

/// Every deletion-minimal pair contains the pair grown from some seed in
/// one of its sides.
#[test]
fn deletion_minimal_pairs_contain_a_grown_pair() {
    for g in small().iter().chain(&fixtures()) {
        for p in oracle::enumerate_hposcs(g, HposcKind::DeletionMinimal, HPOSC_CAP).unwrap() {
            let found = [p.clone(), p.swapped()].iter().any(|q| {
                let a = q.a().as_slice();
                a.iter().enumerate().any(|(i, &u)| {
                    a[i + 1..].iter().any(|&v| {
                        schposc(g, u, v)
                            .unwrap()
                            .is_some_and(|s| s.a().is_subset(q.a()) && s.b().is_subset(q.b()))
                    })
                })
            });
            assert!(found, "{p} in {g:?}");
        }
    }
}

#[test]
fn antithickening_is_sound_and_idempotent() {
    for g in non_degenerate() {
        let r = optimal_antithickening(&g, AntithickenOptions::default()).unwrap();
        assert!(verify_thickening(&r.reduced, &r.map, &g).unwrap());
        assert!(is_laminar(&r.reduced));
        assert!(oracle::laminar_by_enumeration(&r.reduced, HPOSC_CAP).unwrap());
        for p in &r.contracted_pairs {
            assert!(oracle::pair_is(&g, p, HposcKind::SquareConnected, HPOSC_CAP).unwrap());
        }
        let again = optimal_antithickening(&r.reduced, AntithickenOptions::default()).unwrap();
        assert!(again.is_identity());
        assert_eq!(again.reduced, r.reduced);
    }
}

/// Every square-connected pair lies inside one contracted pair, and every
/// semiedge of the result is a thin semiedge or a square-connected pair.
#[test]
fn contracted_pairs_cover_all_square_connected_pairs() {
    for g in non_degenerate() {
        let r = optimal_antithickening(&g, AntithickenOptions::default()).unwrap();
        for p in oracle::enumerate_hposcs(&g, HposcKind::SquareConnected, HPOSC_CAP).unwrap() {
            let homes = r.contracted_pairs.iter().filter(|c| p.is_within_unordered(c)).count();
            assert_eq!(homes, 1, "{p} in {g:?}");
        }
        for (a, b) in r.reduced.semiedges() {
            let (ia, ib) = (r.map.part(a), r.map.part(b));
            if ia.len() == 1 && ib.len() == 1 {
                assert!(g.at(ia[0], ib[0]) == trigraph_kit::Adjacency::Semi);
            } else {
                let p = CliquePair::new(ia.clone(), ib.clone()).unwrap();
                assert!(oracle::pair_is(&g, &p, HposcKind::SquareConnected, HPOSC_CAP).unwrap());
            }
        }
        // parts of distinct contracted pairs are uniformly related
        let pairs = collect_maximal_schposcs(&g).unwrap();
        for (i, p) in pairs.iter().enumerate() {
            for q in &pairs[i + 1..] {
                for x in [p.a(), p.b()] {
                    for y in [q.a(), q.b()] {
                        assert!(g.sets_strongly_complete(x, y) || g.sets_strongly_anticomplete(x, y));
                    }
                }
            }
        }
    }
}

#[test]
fn antithickenings_compose() {
    let mut graphs = oracle::catalog_up_to(4).unwrap();
    graphs.extend(fixtures().into_iter().filter(|g| g.n() <= 8));
    for g in &graphs {
        let outer = oracle::enumerate_antithickenings(g, ANTITHICKENING_CAP).unwrap();
        assert!(outer.iter().any(|q| q.map.is_identity() && &q.graph == g));
        for q in &outer {
            assert!(verify_thickening(&q.graph, &q.map, g).unwrap());
            for q2 in oracle::enumerate_antithickenings(&q.graph, ANTITHICKENING_CAP).unwrap() {
                let composed = compose_thickenings(&q2.map, &q.map).unwrap();
                assert!(verify_thickening(&q2.graph, &composed, g).unwrap());
            }
        }
    }
}

#[test]
fn forced_runs_fail_only_with_structural_errors() {
    use trigraph_kit::Error;
    let forced = AntithickenOptions { force: true, recheck: true };
    for g in small().iter().filter(|g| g.classify().degenerate) {
        match optimal_antithickening(g, forced) {
            Ok(r) => {
                assert!(verify_thickening(&r.reduced, &r.map, g).unwrap());
                assert!(is_laminar(&r.reduced));
            }
            Err(Error::DegenerateStructure(_)) => {}
            Err(e) => panic!("{e} on {g:?}"),
        }
    }
}
