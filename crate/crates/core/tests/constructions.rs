use eog::constructions::{
    d_graph, disjoint_k4, embed_d_canonical, explower_order, k9_labeling, recursive_g, recursive_g_prime, rightright,
    star_plus_matching, turan_witness, K9_LABELS,
};
use eog::containment::is_valid_embedding;
use eog::graph::{cycle_pattern, path_pattern};
use eog::orderchrom::{auxiliary_graph, dialemma_check};
use eog::verify::all_patterns;
use eog::{avoids_family, canonical_clique, contains, CliqueKind, EdgeOrderedGraph, EogError, Side, SidedPattern};

#[test]
fn star_plus_matching_counts_and_avoidance() {
    let p = path_pattern(&[1, 3, 2]).unwrap();
    for n in 1..=8 {
        let g = star_plus_matching(n).unwrap();
        assert_eq!(g.vertex_count(), n);
        assert_eq!(g.edge_count(), 3 * (n - 1) / 2, "n={n}");
        assert!(avoids_family(&g, std::slice::from_ref(&p)).unwrap());
    }
}

#[test]
fn disjoint_k4_counts_and_avoidance() {
    let p = path_pattern(&[1, 2, 3]).unwrap();
    for c in 1..=3 {
        let g = disjoint_k4(c).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (4 * c, 6 * c));
        assert!(avoids_family(&g, std::slice::from_ref(&p)).unwrap());
    }
}

#[test]
fn recursive_counts_for_i_up_to_6() {
    let p = path_pattern(&[1, 3, 4, 2]).unwrap();
    let q = path_pattern(&[2, 1, 4, 3]).unwrap();
    for i in 0..=6 {
        for g in [recursive_g(i), recursive_g_prime(i)] {
            assert_eq!(g.vertex_count(), 1 << i);
            assert_eq!(g.edge_count(), i * (1 << i) / 2);
        }
    }
    assert!(avoids_family(&recursive_g(6), &[p]).unwrap());
    assert!(avoids_family(&recursive_g_prime(6), &[q]).unwrap());
}

#[test]
fn rightright_counts_for_i_up_to_6() {
    for i in 1..=6 {
        let g = rightright(i).unwrap();
        let edges = if i == 1 { 1 } else { (i + 1) << (i - 2) };
        assert_eq!(g.graph().edge_count(), edges);
        assert_eq!(g.vertices_on(Side::Left).len(), 1 << (i - 1));
        assert_eq!(g.vertices_on(Side::Right).len(), 1 << (i - 1));
    }
    assert!(rightright(0).is_err());
}

#[derive(Clone, Copy)]
enum Slot {
    /// Crossing edges above every other edge, edges inside A below those inside B.
    Last,
    /// Crossing edges above every edge inside A and below every edge inside B.
    Middle,
}

/// Whether the vertices of `h` split into non-empty `A`, `B` whose crossing
/// edges form a matching placed in the order as `slot` describes.
fn has_split(h: &EdgeOrderedGraph, slot: Slot) -> bool {
    let n = h.vertex_count();
    (1u32..(1 << n) - 1).any(|mask| {
        let in_a = |v: usize| mask >> v & 1 == 1;
        let (mut inside_a, mut inside_b, mut crossing) = (Vec::new(), Vec::new(), Vec::new());
        let mut ends = Vec::new();
        for (t, &(u, v)) in h.edges().iter().enumerate() {
            match (in_a(u), in_a(v)) {
                (true, true) => inside_a.push(t),
                (false, false) => inside_b.push(t),
                _ => {
                    crossing.push(t);
                    ends.extend([u, v]);
                }
            }
        }
        ends.sort_unstable();
        if ends.windows(2).any(|w| w[0] == w[1]) {
            return false;
        }
        let below = |xs: &[usize], ys: &[usize]| xs.iter().all(|x| ys.iter().all(|y| x < y));
        match slot {
            Slot::Last => below(&inside_a, &inside_b) && below(&inside_a, &crossing) && below(&inside_b, &crossing),
            Slot::Middle => below(&inside_a, &crossing) && below(&crossing, &inside_b),
        }
    })
}

#[test]
fn generalized_avoidance_of_the_doubling_constructions() {
    let hosts: Vec<EdgeOrderedGraph> = (0..=4).map(recursive_g).collect();
    let primes: Vec<EdgeOrderedGraph> = (0..=4).map(recursive_g_prime).collect();
    let mut checked = (0, 0);
    for h in all_patterns(5) {
        if !has_split(&h, Slot::Last) {
            checked.0 += 1;
            for g in &hosts {
                assert!(contains(g, &h).unwrap().is_none(), "{h:?}");
            }
        }
        let connected = h.underlying().components().len() == 1;
        if connected && !has_split(&h, Slot::Middle) {
            checked.1 += 1;
            for g in &primes {
                assert!(contains(g, &h).unwrap().is_none(), "{h:?}");
            }
        }
    }
    assert!(checked.0 > 0 && checked.1 > 0, "{checked:?}");
}

#[test]
fn diamonds() {
    assert_eq!(d_graph(2).unwrap().edge_count(), 1);
    assert_eq!(d_graph(4).unwrap().edges(), &[(0, 1), (0, 2), (0, 3), (1, 3), (2, 3)]);
    for n in 2..=7 {
        let d = d_graph(n).unwrap();
        assert_eq!(d.edge_count(), 2 * n - 3);
        for kind in CliqueKind::ALL {
            let emb = embed_d_canonical(n, kind).unwrap();
            assert!(is_valid_embedding(&canonical_clique(n, kind), &d, &emb), "n={n} {kind}");
        }
    }
    assert!(d_graph(1).is_err());
}

#[test]
fn k9_matrix_is_transcribed() {
    let sum: u32 = K9_LABELS.iter().flatten().sum();
    let weighted: u32 = K9_LABELS
        .iter()
        .enumerate()
        .flat_map(|(i, row)| row.iter().enumerate().map(move |(j, &l)| (9 * i as u32 + j as u32) * l))
        .sum();
    assert_eq!((sum, weighted), (1332, 54260));
    for (i, row) in K9_LABELS.iter().enumerate() {
        assert_eq!(row[i], 0);
        for (j, &l) in row.iter().enumerate() {
            assert_eq!(l, K9_LABELS[j][i]);
        }
    }
    let k9 = k9_labeling();
    assert_eq!(k9.position_of(0, 1), Some(0));
    assert_eq!(k9.position_of(0, 8), Some(35));
    for x in 0..9 {
        assert!(auxiliary_graph(&k9, x).unwrap().is_bipartite());
    }
}

#[test]
fn explower_orders() {
    assert_eq!(explower_order(3).unwrap().edge_count(), 1);
    for n in 3..=6 {
        let k = explower_order(n).unwrap();
        assert_eq!(k.vertex_count(), 1 << (n - 2));
        assert!(k.is_complete());
        for x in 0..k.vertex_count() {
            assert!(auxiliary_graph(&k, x).unwrap().is_bipartite(), "n={n} x={x}");
        }
    }
    assert!(dialemma_check(&explower_order(4).unwrap(), 4).unwrap());
    assert!(!dialemma_check(&canonical_clique(4, CliqueKind::Min), 4).unwrap());
}

#[test]
fn turan_witnesses() {
    let c = cycle_pattern(&[1, 2, 3, 4]).unwrap();
    let g = turan_witness(6, 2, std::slice::from_ref(&c)).unwrap();
    assert_eq!((g.vertex_count(), g.edge_count()), (6, 9));
    assert!(g.underlying().is_bipartite());
    assert!(avoids_family(&g, &[c]).unwrap());

    let p6 = path_pattern(&[1, 4, 3, 2, 5]).unwrap();
    assert!(matches!(turan_witness(4, 3, &[p6]), Err(EogError::NoAvoidingOrder { .. })));
    let e = path_pattern(&[1]).unwrap();
    assert!(turan_witness(5, 2, &[e]).is_err());
}

#[test]
fn rooted_paths_start_at_their_root() {
    let p = SidedPattern::rooted_path(&[1, 3, 2]).unwrap();
    assert_eq!(p.root(), Some(0));
    assert_eq!(p.side(0), Side::Left);
    assert_eq!(p.side(1), Side::Right);
}
