use eog::constructions::{d_graph, explower_order, k9_labeling};
use eog::graph::{cycle_pattern, path_pattern};
use eog::orderchrom::{
    all_orderings, chi_exceeds, dialemma_check, has_close_class_2coloring, is_chi_infinite, is_chi_two,
    labeling_scan, order_chromatic, ChiResult,
};
use eog::verify::{all_patterns, naive_contains};
use eog::{avoids_family, canonical_clique, CliqueKind, EdgeOrderedGraph, SimpleGraph};
use proptest::prelude::*;

#[test]
fn chi_two_implies_close_colouring_and_conversely_for_forests() {
    let mut forests = 0;
    for h in all_patterns(5) {
        let two = is_chi_two(&h).unwrap();
        let close = has_close_class_2coloring(&h);
        if two {
            assert!(close, "{h:?}");
        }
        if h.underlying().is_forest() {
            forests += 1;
            assert_eq!(two, close, "{h:?}");
        }
    }
    assert!(forests > 50, "{forests}");
}

#[test]
fn exactly_two_matches_chi_two_on_singletons() {
    for h in all_patterns(4) {
        let chi = order_chromatic(std::slice::from_ref(&h), 2).unwrap();
        assert_eq!(chi == ChiResult::Exactly(2), is_chi_two(&h).unwrap(), "{h:?}");
    }
}

#[test]
fn chi_examples() {
    let c1234 = cycle_pattern(&[1, 2, 3, 4]).unwrap();
    assert!(!is_chi_two(&c1234).unwrap());
    assert!(has_close_class_2coloring(&c1234));
    assert_eq!(order_chromatic(std::slice::from_ref(&c1234), 4).unwrap(), ChiResult::Infinite);
    let p123 = path_pattern(&[1, 2, 3]).unwrap();
    assert_eq!(order_chromatic(&[p123], 2).unwrap(), ChiResult::Exactly(2));
    assert!(!has_close_class_2coloring(&cycle_pattern(&[1, 2, 3]).unwrap()));

    let edge = path_pattern(&[1]).unwrap();
    assert!(!is_chi_infinite(std::slice::from_ref(&edge)).unwrap());
    for k in 2..=3 {
        assert!(!chi_exceeds(std::slice::from_ref(&edge), k).unwrap());
    }

    let pair = [path_pattern(&[1, 4, 2, 3]).unwrap(), path_pattern(&[2, 3, 1, 4]).unwrap()];
    assert!(is_chi_infinite(&pair[..1]).unwrap() && is_chi_infinite(&pair[1..]).unwrap());
    assert_eq!(order_chromatic(&pair, 3).unwrap(), ChiResult::Exactly(3));
    assert!(order_chromatic(&pair, 1).is_err());
}

#[test]
fn exceeds_is_monotone_in_the_family() {
    let pool: Vec<EdgeOrderedGraph> = all_patterns(3).into_iter().filter(|h| h.vertex_count() <= 4).collect();
    for (i, a) in pool.iter().enumerate() {
        for b in &pool[i + 1..] {
            let both = [a.clone(), b.clone()];
            for k in 2..=3 {
                if chi_exceeds(&both, k).unwrap() {
                    assert!(chi_exceeds(std::slice::from_ref(a), k).unwrap());
                    assert!(chi_exceeds(std::slice::from_ref(b), k).unwrap());
                }
            }
        }
    }
}

#[test]
fn every_k4_labeling_is_avoided_by_three_canonical_cliques() {
    let k4 = SimpleGraph::complete(4).with_lexicographic_order();
    let hosts: Vec<EdgeOrderedGraph> = CliqueKind::ALL.iter().map(|&kind| canonical_clique(6, kind)).collect();
    let orderings = all_orderings(&k4).unwrap();
    assert_eq!(orderings.len(), 30);
    for (l, _) in &orderings {
        let avoiding = hosts.iter().filter(|h| avoids_family(h, std::slice::from_ref(l)).unwrap()).count();
        assert!(avoiding >= 3, "{l:?}");
    }
}

#[test]
fn scans_of_small_graphs() {
    let scan = labeling_scan(&SimpleGraph::complete(3).with_lexicographic_order(), 3).unwrap();
    assert_eq!(scan.classes.len(), 1);
    assert_eq!(scan.classes[0].chi, ChiResult::Exactly(3));
    let p4 = path_pattern(&[1, 2, 3]).unwrap();
    let scan = labeling_scan(&p4, 2).unwrap();
    assert!(scan.classes.iter().all(|c| c.chi == ChiResult::Exactly(2)));
    assert_eq!(scan.chi_plus(), Some(ChiResult::Exactly(2)));
}

#[test]
fn dialemma_certificates_avoid_diamonds() {
    for (k, n) in [(explower_order(4).unwrap(), 4), (explower_order(5).unwrap(), 5), (k9_labeling(), 4)] {
        assert!(dialemma_check(&k, n).unwrap());
        assert!(avoids_family(&k, &[d_graph(n).unwrap()]).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn dialemma_true_means_no_diamond(order in Just((0..10).collect::<Vec<usize>>()).prop_shuffle()) {
        let pairs: Vec<(usize, usize)> = (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).collect();
        let k = EdgeOrderedGraph::new(5, order.iter().map(|&t| pairs[t])).unwrap();
        for n in 3..=5 {
            if dialemma_check(&k, n).unwrap() {
                prop_assert!(!naive_contains(&k, &d_graph(n).unwrap()));
            }
        }
    }
}
