use eog::dsword::{
    contains_word, ds_bruteforce, equivalent, greedy_k_regular, is_k_regular, is_subsequence, u_of, u_of_oriented,
    w_of, w_prime_of, DsResult, Word,
};
use eog::matrix::{contains_pattern, graph_from_matrix_col, graph_from_matrix_rowcol, parse_mat, patterns_for, serialize_mat, ZeroOnePattern};
use eog::verify::{naive_contains, random_bipartite, random_graph, random_star_forest};
use eog::graph::path_pattern;
use eog::{canonical_clique, contains, lex_exact, Budget, CliqueKind, EdgeOrderedGraph};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn w(s: &str) -> Word {
    s.parse().unwrap()
}

/// Containment of words by trying every index subset of the right length.
fn word_oracle(u: &Word, f: &Word) -> bool {
    let (n, k) = (u.len(), f.len());
    if k > n || n > 20 {
        return false;
    }
    (0u32..1 << n).filter(|m| m.count_ones() as usize == k).any(|mask| {
        let sub = Word((0..n).filter(|&i| mask >> i & 1 == 1).map(|i| u.letters()[i]).collect());
        equivalent(&sub, f)
    })
}

fn word_strategy(max_len: usize, letters: u32) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..letters, 0..=max_len).prop_map(Word)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn word_containment_matches_oracle(u in word_strategy(12, 4), f in word_strategy(5, 3)) {
        prop_assume!(!f.is_empty());
        prop_assert_eq!(contains_word(&u, &f).unwrap(), word_oracle(&u, &f));
    }

    #[test]
    fn equivalence_is_renaming(u in word_strategy(10, 5), shift in 1u32..50) {
        let renamed = Word(u.letters().iter().map(|&a| a * 7 + shift).collect());
        prop_assert!(equivalent(&u, &renamed));
        prop_assert!(equivalent(&u, &u.normalized()));
    }

    #[test]
    fn greedy_subword_is_regular(u in word_strategy(20, 6), k in 2usize..5) {
        let g = greedy_k_regular(&u, k);
        prop_assert!(is_k_regular(&g, k));
        prop_assert!(is_subsequence(&g, &u));
    }

    #[test]
    fn regular_subword_of_graph_word_is_long(seed in any::<u64>(), k in 2usize..5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_graph(&mut rng, 9, 12);
        let sub = greedy_k_regular(&u_of(&g), k);
        prop_assert!(g.edge_count() == 0 || sub.len() * (k - 1) > g.edge_count());
    }

    #[test]
    fn word_containment_implies_graph_containment_for_every_orientation(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_graph(&mut rng, 6, 6);
        let f = random_star_forest(&mut rng, 2);
        let wp = w_prime_of(&f).unwrap();
        let truth = contains(&g, &f).unwrap().is_some();
        prop_assert_eq!(truth, naive_contains(&g, &f));
        for flips in 0u32..1 << g.edge_count() {
            let u = u_of_oriented(&g, |t| flips >> t & 1 == 1);
            if contains_word(&u, &wp).unwrap() {
                prop_assert!(truth);
            }
        }
    }

    #[test]
    fn functor_is_sound(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = eog::verify::random_matrix(&mut rng, 6, 6, 0.5);
        let h = random_bipartite(&mut rng, 4);
        let ps = patterns_for(&h).unwrap();
        if !ps.iter().any(|p| contains_pattern(&m, p)) {
            prop_assert!(contains(graph_from_matrix_rowcol(&m).graph(), &h).unwrap().is_none());
        }
    }

    #[test]
    fn submatrix_containment_matches_oracle(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = eog::verify::random_matrix(&mut rng, 6, 6, 0.5);
        let p = eog::verify::random_matrix(&mut rng, 3, 4, 0.4);
        prop_assert_eq!(contains_pattern(&m, &p), submatrix_oracle(&m, &p));
    }

    #[test]
    fn mat_text_round_trips(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = eog::verify::random_matrix(&mut rng, 7, 7, 0.5);
        prop_assert_eq!(parse_mat(&serialize_mat(&m)).unwrap(), m);
    }
}

/// Row and column choices as index lists, written independently of the
/// library's oracle.
fn submatrix_oracle(m: &ZeroOnePattern, p: &ZeroOnePattern) -> bool {
    fn choose(n: usize, k: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in from..n {
            cur.push(i);
            choose(n, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let (mut rows, mut cols) = (Vec::new(), Vec::new());
    choose(m.rows(), p.rows(), 0, &mut Vec::new(), &mut rows);
    choose(m.cols(), p.cols(), 0, &mut Vec::new(), &mut cols);
    rows.iter().any(|r| cols.iter().any(|c| p.ones().iter().all(|&(i, j)| m.get(r[i], c[j]))))
}

#[test]
fn word_examples() {
    assert!(equivalent(&w("aba"), &w("xyx")));
    assert!(!equivalent(&w("aa"), &w("ab")));
    assert!(contains_word(&w("abcacb"), &w("aa")).unwrap());
    assert!(!contains_word(&w("abab"), &w("ababa")).unwrap());
    assert_eq!(greedy_k_regular(&w("aabbab"), 2), w("abab"));
    assert_eq!(greedy_k_regular(&w("abcdef"), 3), w("abcdef"));
    let k4 = canonical_clique(4, CliqueKind::Min);
    assert!(greedy_k_regular(&u_of(&k4), 3).len() >= 4);
    assert_eq!(u_of(&EdgeOrderedGraph::empty(3)), Word(vec![]));
}

#[test]
fn star_forest_words() {
    // Two stars alternating as a, b, a, b, a.
    let f = EdgeOrderedGraph::new(7, [(0, 1), (4, 5), (0, 2), (4, 6), (0, 3)]).unwrap();
    assert!(equivalent(&w_of(&f).unwrap(), &w("ababa")));
    assert_eq!(w_prime_of(&f).unwrap().len(), 50);
    let star = EdgeOrderedGraph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
    assert_eq!(w_of(&star).unwrap(), w("aaa"));
    let two = EdgeOrderedGraph::new(6, [(0, 1), (0, 2), (3, 4), (3, 5)]).unwrap();
    assert_eq!(w_of(&two).unwrap(), w("aabb"));
    assert!(w_of(&path_pattern(&[1, 2, 3]).unwrap()).is_err());
}

#[test]
fn doubling_graph_word_contains_long_runs() {
    let g = eog::constructions::recursive_g(3);
    let u = u_of(&g);
    assert_eq!(u.len(), 24);
    // Every vertex of G_3 has degree 3, so no letter occurs four times.
    assert!(contains_word(&u, &w("aaa")).unwrap());
    assert!(!contains_word(&u, &w("aaaa")).unwrap());
}

#[test]
fn ds_values() {
    let abab = w("abab");
    assert_eq!(ds_bruteforce(1, &abab, 64).unwrap(), DsResult::Exact(1));
    assert_eq!(ds_bruteforce(2, &abab, 64).unwrap(), DsResult::Exact(3));
    assert_eq!(ds_bruteforce(3, &abab, 64).unwrap(), DsResult::Exact(5));
    assert_eq!(ds_bruteforce(4, &abab, 64).unwrap(), DsResult::Exact(7));
    assert_eq!(ds_bruteforce(4, &abab, 5).unwrap(), DsResult::AtLeast(5));
}

#[test]
fn ds_bound_holds_at_desk_scale() {
    // Two single-edge stars, so w'(F) has k = 2 letters.
    let f = EdgeOrderedGraph::new(4, [(0, 1), (2, 3)]).unwrap();
    let wp = w_prime_of(&f).unwrap();
    let k = wp.distinct_letters();
    for n in 2..=4 {
        let lex = lex_exact(n, std::slice::from_ref(&f), Budget::default()).unwrap().value;
        // A lower bound on ds is enough once it already covers lex.
        let ds = match ds_bruteforce(n, &wp, 12).unwrap() {
            DsResult::Exact(v) | DsResult::AtLeast(v) => v,
        };
        assert!(lex <= (k - 1) * ds, "n={n}: {lex} > {}", (k - 1) * ds);
    }
}

#[test]
fn matrix_examples() {
    let rows = |r: &[&str]| {
        let data: Vec<Vec<u8>> = r.iter().map(|s| s.bytes().map(|b| b - b'0').collect()).collect();
        ZeroOnePattern::from_rows(&data).unwrap()
    };
    assert!(contains_pattern(&rows(&["11", "11"]), &rows(&["10", "01"])));
    assert!(!contains_pattern(&rows(&["10", "01"]), &rows(&["11"])));
    let g = graph_from_matrix_rowcol(&rows(&["11", "01"]));
    assert_eq!(g.graph().edges(), &[(0, 2), (0, 3), (1, 3)]);
    assert_eq!(graph_from_matrix_col(&rows(&["1", "1"])).graph().edges(), &[(0, 2), (1, 2)]);
    assert_eq!(patterns_for(&path_pattern(&[1, 4, 3, 2]).unwrap()).unwrap(), vec![rows(&["011", "101"])]);
    assert!(patterns_for(&eog::graph::cycle_pattern(&[1, 2, 3]).unwrap()).is_err());
    let p132 = patterns_for(&path_pattern(&[1, 3, 2]).unwrap()).unwrap();
    assert!(!p132.is_empty());
    for p in &p132 {
        assert!(eog::are_isomorphic(graph_from_matrix_rowcol(p).graph(), &path_pattern(&[1, 3, 2]).unwrap()));
    }
}

#[test]
fn avoiding_matrices_give_avoiding_graphs() {
    // Every 4x4 matrix avoiding the P_5^{1432} matrix yields a graph avoiding the path.
    let forbidden = ZeroOnePattern::new(2, 3, [(0, 1), (0, 2), (1, 0), (1, 2)]).unwrap();
    let path = path_pattern(&[1, 4, 3, 2]).unwrap();
    let mut avoiding = 0;
    for mask in 0u32..1 << 16 {
        let m = ZeroOnePattern::new(4, 4, (0..16).filter(|&i| mask >> i & 1 == 1).map(|i| (i / 4, i % 4))).unwrap();
        if !contains_pattern(&m, &forbidden) {
            avoiding += 1;
            assert!(contains(graph_from_matrix_rowcol(&m).graph(), &path).unwrap().is_none());
        }
    }
    assert!(avoiding > 1000);
}
