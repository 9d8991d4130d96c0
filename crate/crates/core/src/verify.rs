//! Registry of reproducible checks, shared by `eog verify` and the acceptance
//! tests. Each check returns a pass flag and a one-line detail.

use std::collections::{BTreeMap, HashMap};
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::canonical::{canonical_clique, enumerate_canonical, CliqueKind};
use crate::constructions::{
    d_graph, disjoint_k4, embed_d_canonical, explower_order, k9_labeling, recursive_g, recursive_g_prime, rightright,
};
use crate::containment::{avoids_family, contains, is_valid_embedding, side_contains};
use crate::dsword::{
    contains_word, ds_bruteforce, greedy_k_regular, is_k_regular, is_subsequence, u_of, u_of_oriented, w_prime_of,
    DsResult, Word,
};
use crate::error::Result;
use crate::graph::{cycle_pattern, path_pattern, EdgeOrderedGraph, Side, SidedPattern, SimpleGraph};
use crate::key::{are_isomorphic, canonical_key, CanonicalKey};
use crate::matrix::{contains_pattern, graph_from_matrix_rowcol, patterns_for, ZeroOnePattern};
use crate::orderchrom::{all_orderings, dialemma_check, is_chi_two, labeling_scan, order_chromatic, ChiResult};
use crate::search::{ex_exact, lex_exact, Budget, SearchStatus};

/// Seed for every randomized check.
pub const SEED: u64 = 0x5eed_e0c1;

/// A single reproducible check.
pub struct Claim {
    pub id: u32,
    pub name: &'static str,
    run: fn() -> Result<Outcome>,
}

/// What a check found.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub passed: bool,
    pub detail: String,
}

impl Outcome {
    fn new(passed: bool, detail: impl Into<String>) -> Self {
        Outcome { passed, detail: detail.into() }
    }
}

/// A finished check.
#[derive(Clone, Debug)]
pub struct Report {
    pub id: u32,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl std::fmt::Display for Report {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} {:>2} {} ({:.2}s): {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.elapsed.as_secs_f64(),
            self.detail
        )
    }
}

impl Claim {
    /// Runs the check; library errors count as failures.
    pub fn run(&self) -> Report {
        let start = Instant::now();
        let outcome = (self.run)().unwrap_or_else(|e| Outcome::new(false, format!("error: {e}")));
        Report { id: self.id, name: self.name, passed: outcome.passed, detail: outcome.detail, elapsed: start.elapsed() }
    }
}

pub const CLAIMS: &[Claim] = &[
    Claim { id: 1, name: "lex-p4-132-213", run: lex_132_213 },
    Claim { id: 2, name: "lex-p4-123", run: lex_123 },
    Claim { id: 3, name: "canonical-counts", run: canonical_counts },
    Claim { id: 4, name: "non-principal-family", run: non_principal },
    Claim { id: 5, name: "chi-p6-14325", run: chi_p6 },
    Claim { id: 6, name: "k9-diamond-bound", run: k9_diamond },
    Claim { id: 7, name: "explower-small", run: explower_small },
    Claim { id: 8, name: "generalized-diamond", run: gen_diamond },
    Claim { id: 9, name: "k4-labelings", run: k4_labelings },
    Claim { id: 10, name: "chi-plus-small", run: chi_plus_small },
    Claim { id: 11, name: "recursive-constructions", run: recursive_constructions },
    Claim { id: 12, name: "right-avoiding-construction", run: right_avoiding },
    Claim { id: 13, name: "clique-labelings-avoid", run: clique_avoidance },
    Claim { id: 14, name: "ds-bridge", run: ds_bridge },
    Claim { id: 15, name: "matrix-functor", run: matrix_functor },
    Claim { id: 16, name: "oracle-equivalences", run: oracle_equivalences },
];

pub fn claim(id: u32) -> Option<&'static Claim> {
    CLAIMS.iter().find(|c| c.id == id)
}

fn path(labels: &[usize]) -> EdgeOrderedGraph {
    path_pattern(labels).expect("fixed labels are a permutation")
}

fn cycle(labels: &[usize]) -> EdgeOrderedGraph {
    cycle_pattern(labels).expect("fixed labels are a permutation")
}

fn exact_budget() -> Budget {
    Budget::nodes(50_000_000).with_time(Duration::from_secs(60))
}

fn lex_132_213() -> Result<Outcome> {
    let mut seen = Vec::new();
    let mut ok = true;
    for labels in [[1, 3, 2], [2, 1, 3]] {
        let p = path(&labels);
        let values: Vec<usize> = (2..=7)
            .map(|n| {
                let r = lex_exact(n, std::slice::from_ref(&p), exact_budget())?;
                ok &= r.status == SearchStatus::Exact
                    && r.value == 3 * (n - 1) / 2
                    && avoids_family(&r.witness, std::slice::from_ref(&p))?;
                Ok(r.value)
            })
            .collect::<Result<_>>()?;
        seen.push(format!("{labels:?}: {values:?}"));
    }
    Ok(Outcome::new(ok, seen.join("; ")))
}

/// Values of `lex(n, P_4^{123})` for n = 4, 5, 6 found by the exact search.
pub const LEX_123_VALUES: [usize; 3] = [6, 6, 7];

fn lex_123() -> Result<Outcome> {
    let p = path(&[1, 2, 3]);
    let mut values = Vec::new();
    let mut ok = true;
    for n in 4..=6 {
        let r = lex_exact(n, std::slice::from_ref(&p), exact_budget())?;
        ok &= r.is_exact() && r.value <= 3 * n / 2;
        values.push(r.value);
    }
    ok &= values[0] == 6 && values[1] <= 7 && values[2] < 9 && values[..] == LEX_123_VALUES;
    let k4s = disjoint_k4(2)?;
    let k4_ok = k4s.vertex_count() == 8 && k4s.edge_count() == 12 && avoids_family(&k4s, &[p])?;
    Ok(Outcome::new(ok && k4_ok, format!("n=4..6: {values:?}; two disjoint K4 avoid: {k4_ok}")))
}

fn canonical_counts() -> Result<Outcome> {
    let three = enumerate_canonical(3, 3)?;
    let interleaved = three.orders.iter().filter(|(s, _)| s.has_interleave()).count();
    let classes = distinct_keys(three.orders.iter().map(|(_, g)| g));
    let two = enumerate_canonical(2, 3)?;
    let two_classes = distinct_keys(two.orders.iter().map(|(_, g)| g));
    let ok = three.orders.len() == 3840
        && interleaved == 768
        && classes == 80
        && two.orders.len() == 8
        && two_classes == 1;
    Ok(Outcome::new(
        ok,
        format!(
            "k=3: {} non-interleaved + {interleaved} interleaved, {classes} classes; k=2: {} orders, {two_classes} class",
            three.orders.len() - interleaved,
            two.orders.len()
        ),
    ))
}

fn distinct_keys<'a>(graphs: impl Iterator<Item = &'a EdgeOrderedGraph>) -> usize {
    graphs.map(canonical_key).collect::<std::collections::HashSet<_>>().len()
}

fn non_principal() -> Result<Outcome> {
    let a = path(&[1, 4, 2, 3]);
    let b = path(&[2, 3, 1, 4]);
    let pair = order_chromatic(&[a.clone(), b.clone()], 3)?;
    let single_a = order_chromatic(std::slice::from_ref(&a), 3)?;
    let single_b = order_chromatic(std::slice::from_ref(&b), 3)?;
    // Every canonical order of K_{3x2} already contains one of the two paths.
    let small = enumerate_canonical(3, 2)?;
    let mut small_ok = !small.orders.is_empty();
    for (_, g) in &small.orders {
        small_ok &= !avoids_family(g, &[a.clone(), b.clone()])?;
    }
    let ok = pair == ChiResult::Exactly(3)
        && single_a == ChiResult::Infinite
        && single_b == ChiResult::Infinite
        && small_ok;
    Ok(Outcome::new(
        ok,
        format!("pair: {pair}, singletons: {single_a}/{single_b}, K_3x2 orders all contain one: {small_ok}"),
    ))
}

fn chi_p6() -> Result<Outcome> {
    let p = path(&[1, 4, 3, 2, 5]);
    let chi = order_chromatic(std::slice::from_ref(&p), 3)?;
    Ok(Outcome::new(chi == ChiResult::Exactly(3), format!("chi = {chi}")))
}

fn k9_diamond() -> Result<Outcome> {
    let ok = dialemma_check(&k9_labeling(), 4)?;
    Ok(Outcome::new(ok, format!("dialemma_check(K9, 4) = {ok}")))
}

fn explower_small() -> Result<Outcome> {
    let mut parts = Vec::new();
    let mut ok = true;
    for n in [4, 5] {
        let k = explower_order(n)?;
        let r = dialemma_check(&k, n)?;
        ok &= r;
        parts.push(format!("n={n} (K_{}): {r}", k.vertex_count()));
    }
    Ok(Outcome::new(ok, parts.join(", ")))
}

fn gen_diamond() -> Result<Outcome> {
    let mut ok = true;
    for n in 4..=7 {
        let d = d_graph(n)?;
        for kind in CliqueKind::ALL {
            let host = canonical_clique(n, kind);
            let emb = embed_d_canonical(n, kind)?;
            ok &= is_valid_embedding(&host, &d, &emb) && contains(&host, &d)?.is_some();
        }
    }
    let d4 = d_graph(4)?;
    let hosts: Vec<EdgeOrderedGraph> = CliqueKind::ALL.iter().map(|&k| canonical_clique(6, k)).collect();
    let mut others = 0;
    for (h, _) in all_orderings(&d4)? {
        if are_isomorphic(&h, &d4) {
            continue;
        }
        others += 1;
        let mut avoided = false;
        for host in &hosts {
            avoided |= contains(host, &h)?.is_none();
        }
        ok &= avoided;
    }
    Ok(Outcome::new(ok, format!("D_4..D_7 embed in all four orders; {others} other diamond labelings checked")))
}

fn k4_labelings() -> Result<Outcome> {
    let scan = labeling_scan(&SimpleGraph::complete(4).with_lexicographic_order(), 2)?;
    let hosts: Vec<EdgeOrderedGraph> = CliqueKind::ALL.iter().map(|&k| canonical_clique(6, k)).collect();
    let mut ok = !scan.classes.is_empty();
    let mut fewest = usize::MAX;
    for class in &scan.classes {
        let mut avoiders = 0;
        for host in &hosts {
            avoiders += usize::from(contains(host, &class.graph)?.is_none());
        }
        fewest = fewest.min(avoiders);
        ok &= class.chi == ChiResult::Infinite && avoiders >= 3;
    }
    Ok(Outcome::new(
        ok,
        format!("{} classes, all infinite: {ok}, fewest avoiding orders: {fewest}", scan.classes.len()),
    ))
}

/// Star forests with at most `max_edges` edges, one per multiset of star sizes.
fn star_forests(max_edges: usize) -> Vec<EdgeOrderedGraph> {
    fn partitions(left: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for s in (1..=left.min(cap)).rev() {
            cur.push(s);
            partitions(left - s, s, cur, out);
            cur.pop();
        }
    }
    let mut shapes = Vec::new();
    for m in 1..=max_edges {
        partitions(m, m, &mut Vec::new(), &mut shapes);
    }
    shapes
        .into_iter()
        .map(|sizes| {
            let mut edges = Vec::new();
            let mut next = 0;
            for s in sizes {
                let centre = next;
                edges.extend((1..=s).map(|j| (centre, centre + j)));
                next += s + 1;
            }
            EdgeOrderedGraph::new(next, edges).expect("stars are simple")
        })
        .collect()
}

fn chi_plus_small() -> Result<Outcome> {
    let mut graphs = vec![path(&[1, 2, 3])];
    graphs.extend(star_forests(4));
    let mut labelings = 0;
    let mut ok = true;
    for g in &graphs {
        for (h, _) in all_orderings(g)? {
            labelings += 1;
            ok &= is_chi_two(&h)?;
        }
    }
    let tri = labeling_scan(&cycle(&[1, 2, 3]), 3)?;
    let tri_ok = tri.classes.len() == 1 && tri.classes[0].chi == ChiResult::Exactly(3);
    Ok(Outcome::new(
        ok && tri_ok,
        format!("{labelings} labelings of P_4 and star forests have chi 2: {ok}; K_3: {} class(es), chi {}",
            tri.classes.len(), tri.classes.first().map_or("?".into(), |c| c.chi.to_string())),
    ))
}

fn recursive_constructions() -> Result<Outcome> {
    let p = path(&[1, 3, 4, 2]);
    let q = path(&[2, 1, 4, 3]);
    let mut ok = true;
    for i in 0..=5 {
        let g = recursive_g(i);
        let h = recursive_g_prime(i);
        ok &= g.vertex_count() == 1 << i && g.edge_count() == i * (1 << i) / 2;
        ok &= h.vertex_count() == 1 << i && h.edge_count() == i * (1 << i) / 2;
        ok &= avoids_family(&g, std::slice::from_ref(&p))? && avoids_family(&h, std::slice::from_ref(&q))?;
    }
    Ok(Outcome::new(ok, "G_0..G_5 avoid P_5^1342 and G'_0..G'_5 avoid P_5^2143"))
}

fn right_avoiding() -> Result<Outcome> {
    let patterns = [SidedPattern::rooted_path(&[1, 3, 2])?, SidedPattern::rooted_path(&[2, 1, 3])?];
    let mut ok = true;
    let mut sizes = Vec::new();
    for i in 1..=5 {
        let host = rightright(i)?;
        let g = host.graph();
        let want_edges = if i == 1 { 1 } else { (i + 1) << (i - 2) };
        let lefts = host.vertices_on(Side::Left).len();
        ok &= g.vertex_count() == 1 << i && lefts == 1 << (i - 1) && g.edge_count() == want_edges;
        for p in &patterns {
            ok &= side_contains(&host, p, Side::Right)?.is_none();
        }
        sizes.push(g.edge_count());
    }
    // The side restriction matters: from i = 3 on, both paths occur with their
    // root on the left. G_2 is a monotone 3-edge path and contains neither.
    let mut left_hits = Vec::new();
    for i in 2..=5 {
        let host = rightright(i)?;
        let hit = side_contains(&host, &patterns[0], Side::Left)?.is_some()
            && side_contains(&host, &patterns[1], Side::Left)?.is_some();
        left_hits.push(hit);
    }
    let left_ok = left_hits == [false, true, true, true];
    Ok(Outcome::new(
        ok && left_ok,
        format!("edge counts {sizes:?}; left-contains both for i=2..5: {left_hits:?}"),
    ))
}

fn clique_avoidance() -> Result<Outcome> {
    let paths = [path(&[1, 4, 2, 3]), path(&[2, 4, 1, 3])];
    let cycles = [cycle(&[1, 2, 3, 4]), cycle(&[1, 3, 2, 4])];
    let mut ok = true;
    for n in 2..=8 {
        let max = canonical_clique(n, CliqueKind::Max);
        ok &= avoids_family(&max, &paths)?;
        ok &= avoids_family(&max, &cycles)? && avoids_family(&canonical_clique(n, CliqueKind::Min), &cycles)?;
    }
    Ok(Outcome::new(ok, "K_2..K_8: max avoids P_5^1423, P_5^2413; min and max avoid C_4^1234, C_4^1324"))
}

/// A random graph on at most `max_vertices` vertices with at most `max_edges`
/// edges in random order.
pub fn random_graph(rng: &mut impl Rng, max_vertices: usize, max_edges: usize) -> EdgeOrderedGraph {
    let n = rng.gen_range(2..=max_vertices);
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    pairs.shuffle(rng);
    let m = rng.gen_range(0..=max_edges.min(pairs.len()));
    pairs.truncate(m);
    EdgeOrderedGraph::new(n, pairs).expect("distinct pairs")
}

/// A random star forest with between 1 and `max_edges` edges.
pub fn random_star_forest(rng: &mut impl Rng, max_edges: usize) -> EdgeOrderedGraph {
    let m = rng.gen_range(1..=max_edges);
    let mut edges = Vec::new();
    let mut next = 0;
    let mut left = m;
    while left > 0 {
        let s = rng.gen_range(1..=left);
        edges.extend((1..=s).map(|j| (next, next + j)));
        next += s + 1;
        left -= s;
    }
    edges.shuffle(rng);
    EdgeOrderedGraph::new(next, edges).expect("stars are simple")
}

/// Containment by trying every injective vertex map.
pub fn naive_contains(host: &EdgeOrderedGraph, pattern: &EdgeOrderedGraph) -> bool {
    fn go(host: &EdgeOrderedGraph, pattern: &EdgeOrderedGraph, map: &mut Vec<usize>, used: &mut [bool]) -> bool {
        if map.len() == pattern.vertex_count() {
            let ranks: Option<Vec<usize>> =
                pattern.edges().iter().map(|&(a, b)| host.position_of(map[a], map[b])).collect();
            return ranks.is_some_and(|r| r.windows(2).all(|w| w[0] < w[1]));
        }
        for v in 0..host.vertex_count() {
            if !used[v] {
                used[v] = true;
                map.push(v);
                let found = go(host, pattern, map, used);
                map.pop();
                used[v] = false;
                if found {
                    return true;
                }
            }
        }
        false
    }
    pattern.vertex_count() <= host.vertex_count()
        && go(host, pattern, &mut Vec::new(), &mut vec![false; host.vertex_count()])
}

/// Submatrix containment by trying every row and column subset.
pub fn naive_contains_pattern(m: &ZeroOnePattern, p: &ZeroOnePattern) -> bool {
    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        (0u32..1 << n)
            .filter(|mask| mask.count_ones() as usize == k)
            .map(|mask| (0..n).filter(|&i| mask >> i & 1 == 1).collect())
            .collect()
    }
    if p.rows() > m.rows() || p.cols() > m.cols() {
        return false;
    }
    let col_sets = subsets(m.cols(), p.cols());
    subsets(m.rows(), p.rows()).iter().any(|rows| {
        col_sets
            .iter()
            .any(|cols| p.ones().iter().all(|&(r, c)| m.get(rows[r], cols[c])))
    })
}

pub fn random_matrix(rng: &mut impl Rng, max_rows: usize, max_cols: usize, density: f64) -> ZeroOnePattern {
    let rows = rng.gen_range(1..=max_rows);
    let cols = rng.gen_range(1..=max_cols);
    let ones: Vec<(usize, usize)> =
        (0..rows).flat_map(|r| (0..cols).map(move |c| (r, c))).filter(|_| rng.gen_bool(density)).collect();
    ZeroOnePattern::new(rows, cols, ones).expect("cells in range")
}

fn ds_bridge() -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut regular_ok = true;
    for _ in 0..500 {
        let g = random_graph(&mut rng, 8, 12);
        let k = rng.gen_range(2..=4);
        let u = u_of(&g);
        let sub = greedy_k_regular(&u, k);
        regular_ok &= is_k_regular(&sub, k)
            && is_subsequence(&sub, &u)
            && (g.edge_count() == 0 || sub.len() * (k - 1) > g.edge_count());
    }
    let mut implication_ok = true;
    let mut premises = 0;
    for _ in 0..500 {
        let g = random_graph(&mut rng, 7, 10);
        let f = random_star_forest(&mut rng, 4);
        let wp = w_prime_of(&f)?;
        let truth = contains(&g, &f)?.is_some();
        implication_ok &= truth == naive_contains(&g, &f);
        let flips: u64 = rng.gen();
        for variant in [u_of(&g), u_of_oriented(&g, |t| flips >> (t % 64) & 1 == 1)] {
            if contains_word(&variant, &wp)? {
                premises += 1;
                implication_ok &= truth;
            }
        }
    }
    let abab: Word = "abab".parse()?;
    let ds: Vec<DsResult> = (2..=4).map(|n| ds_bruteforce(n, &abab, 64)).collect::<Result<_>>()?;
    let ds_ok = ds == [DsResult::Exact(3), DsResult::Exact(5), DsResult::Exact(7)];
    Ok(Outcome::new(
        regular_ok && implication_ok && ds_ok,
        format!(
            "k-regular greedy: {regular_ok}; word containment implies graph containment: {implication_ok} \
             ({premises} premises hold); ds(n, abab) for n=2..4: {ds:?}"
        ),
    ))
}

fn matrix_functor() -> Result<Outcome> {
    let unique = patterns_for(&path(&[1, 4, 3, 2]))?;
    let want = ZeroOnePattern::new(2, 3, [(0, 1), (0, 2), (1, 0), (1, 2)])?;
    let unique_ok = unique == [want];
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 1);
    let mut cache: HashMap<CanonicalKey, Vec<ZeroOnePattern>> = HashMap::new();
    let mut sound = true;
    let mut avoiding = 0;
    for _ in 0..200 {
        let density = rng.gen_range(0.2..0.8);
        let m = random_matrix(&mut rng, 6, 6, density);
        let gm = graph_from_matrix_rowcol(&m);
        for _ in 0..4 {
            let h = random_bipartite(&mut rng, 4);
            let key = canonical_key(&h);
            let ps = match cache.get(&key) {
                Some(ps) => ps.clone(),
                None => {
                    let ps = patterns_for(&h)?;
                    cache.insert(key, ps.clone());
                    ps
                }
            };
            if !ps.iter().any(|p| contains_pattern(&m, p)) {
                avoiding += 1;
                sound &= contains(gm.graph(), &h)?.is_none();
            }
        }
    }
    Ok(Outcome::new(
        unique_ok && sound,
        format!("P_5^1432 has the single matrix [[0,1,1],[1,0,1]]: {unique_ok}; soundness on {avoiding} avoiding pairs: {sound}"),
    ))
}

/// A random bipartite edge-ordered graph with 1 to `max_edges` edges and no
/// isolated vertices.
pub fn random_bipartite(rng: &mut impl Rng, max_edges: usize) -> EdgeOrderedGraph {
    loop {
        let g = random_graph(rng, 2 * max_edges, max_edges).without_isolated();
        if !g.is_empty() && g.underlying().is_bipartite() {
            return g;
        }
    }
}

/// Every edge-ordered graph without isolated vertices and with 1 to
/// `max_edges` edges, one per isomorphism class, sorted by edge count.
pub fn all_patterns(max_edges: usize) -> Vec<EdgeOrderedGraph> {
    let mut layer: BTreeMap<CanonicalKey, EdgeOrderedGraph> = BTreeMap::new();
    let single = EdgeOrderedGraph::new(2, [(0, 1)]).expect("one edge");
    layer.insert(canonical_key(&single), single);
    let mut out: Vec<EdgeOrderedGraph> = layer.values().cloned().collect();
    for _ in 1..max_edges {
        let mut next = BTreeMap::new();
        for g in layer.values() {
            let n = g.vertex_count();
            let mut candidates: Vec<EdgeOrderedGraph> = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if !g.has_edge(u, v) {
                        candidates.push(g.with_edge(u, v).expect("non-edge"));
                    }
                }
                candidates.push(g.with_isolated(1).with_edge(u, n).expect("new vertex"));
            }
            candidates.push(g.with_isolated(2).with_edge(n, n + 1).expect("new vertices"));
            for h in candidates {
                next.entry(canonical_key(&h)).or_insert(h);
            }
        }
        out.extend(next.values().cloned());
        layer = next;
    }
    out
}

fn oracle_equivalences() -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 2);
    let mut containment_ok = true;
    for _ in 0..1000 {
        let host = random_graph(&mut rng, 7, 12);
        let pattern = loop {
            let p = random_graph(&mut rng, 5, 5);
            if !p.is_empty() {
                break p;
            }
        };
        let fast = contains(&host, &pattern)?;
        containment_ok &= fast.is_some() == naive_contains(&host, &pattern);
        if let Some(emb) = fast {
            containment_ok &= is_valid_embedding(&host, &pattern, &emb);
        }
    }
    let mut matrix_ok = true;
    for _ in 0..200 {
        let m = random_matrix(&mut rng, 6, 6, 0.5);
        let p = random_matrix(&mut rng, 3, 3, 0.5);
        matrix_ok &= contains_pattern(&m, &p) == naive_contains_pattern(&m, &p);
    }
    let (lex_ok, checked) = lex_invariants(4, 5)?;
    Ok(Outcome::new(
        containment_ok && matrix_ok && lex_ok,
        format!(
            "containment vs oracle: {containment_ok}; submatrix vs oracle: {matrix_ok}; \
             lex invariants over {checked} patterns: {lex_ok}"
        ),
    ))
}

/// Checks the `lex_exact` invariants over every pattern with at most
/// `max_edges` edges for hosts on 2 to `max_n` vertices. Returns the verdict
/// and the number of patterns.
pub fn lex_invariants(max_edges: usize, max_n: usize) -> Result<(bool, usize)> {
    let patterns = all_patterns(max_edges);
    let keys: HashMap<CanonicalKey, usize> = patterns.iter().enumerate().map(|(i, p)| (canonical_key(p), i)).collect();
    let budget = exact_budget();
    let mut ok = true;
    // lex[i][n - 2]
    let mut lex = vec![Vec::new(); patterns.len()];
    for (i, p) in patterns.iter().enumerate() {
        let h = p.underlying();
        for n in 2..=max_n {
            let r = lex_exact(n, std::slice::from_ref(p), budget)?;
            ok &= r.is_exact() && avoids_family(&r.witness, std::slice::from_ref(p))?;
            ok &= r.witness.vertex_count() == n && r.witness.edge_count() == r.value;
            ok &= r.value >= ex_exact(n, &h)?;
            if let Some(&prev) = lex[i].last() {
                ok &= r.value >= prev;
            }
            lex[i].push(r.value);
        }
    }
    for (i, p) in patterns.iter().enumerate() {
        let j = keys[&canonical_key(&p.reverse_order())];
        ok &= lex[i] == lex[j];
        for (j, q) in patterns.iter().enumerate() {
            if q.edge_count() <= p.edge_count() && contains(p, q)?.is_some() {
                ok &= lex[i].iter().zip(&lex[j]).all(|(a, b)| a >= b);
            }
        }
        // Adding a second member can only lower the value.
        let q = &patterns[(i * 7 + 3) % patterns.len()];
        for n in 2..=max_n {
            let both = lex_exact(n, &[p.clone(), q.clone()], budget)?;
            ok &= both.is_exact() && both.value <= lex[i][n - 2];
        }
    }
    Ok((ok, patterns.len()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn claim_ids_are_sequential() {
        for (i, c) in CLAIMS.iter().enumerate() {
            assert_eq!(c.id as usize, i + 1);
        }
    }

    #[test]
    fn naive_oracles_agree_on_small_cases() {
        let k4 = canonical_clique(4, CliqueKind::Min);
        assert!(naive_contains(&k4, &path(&[1, 2])));
        assert!(!naive_contains(&path(&[1, 2]), &path(&[1, 2, 3])));
        let id = ZeroOnePattern::new(2, 2, [(0, 0), (1, 1)]).unwrap();
        let row = ZeroOnePattern::new(1, 2, [(0, 0), (0, 1)]).unwrap();
        assert!(!naive_contains_pattern(&id, &row));
        assert!(naive_contains_pattern(&id, &ZeroOnePattern::new(1, 1, [(0, 0)]).unwrap()));
    }

    #[test]
    fn pattern_census() {
        let counts: Vec<usize> = (1..=3).map(|m| all_patterns(3).iter().filter(|p| p.edge_count() == m).count()).collect();
        // Two edges form a path or a matching.
        assert_eq!(&counts[..2], &[1, 2]);
    }

    #[test]
    fn star_forest_shapes() {
        assert_eq!(star_forests(4).len(), 1 + 2 + 3 + 5);
        assert!(star_forests(4).iter().all(EdgeOrderedGraph::is_star_forest));
    }
}
