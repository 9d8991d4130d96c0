//! Explicit extremal constructions.
//!
//! Wherever a construction leaves a choice open (which matching, the order
//! inside a matching, ties), the choice is fixed so that output is
//! reproducible byte for byte.

use crate::canonical::CliqueKind;
use crate::containment::{avoids_family, is_valid_embedding, Embedding};
use crate::error::{EogError, Result};
use crate::graph::{EdgeOrderedGraph, Side, SidedPattern};
use crate::orderchrom::avoiding_canonical_order;

/// A star centred at `0` followed by a matching on `1..n`; the star edges get
/// the smallest ranks. Has `floor(3(n-1)/2)` edges and avoids `P_4^{132}`.
pub fn star_plus_matching(n: usize) -> Result<EdgeOrderedGraph> {
    if n == 0 {
        return Err(EogError::InvalidParameter("star_plus_matching needs n >= 1".into()));
    }
    let star = (1..n).map(|i| (0, i));
    let matching = (1..n).step_by(2).filter(|&i| i + 1 < n).map(|i| (i, i + 1));
    EdgeOrderedGraph::new(n, star.chain(matching))
}

/// `c` disjoint copies of `K_4`, each ordered `ab < cd < ac < bd < ad < bc`,
/// copies one after another. Avoids `P_4^{123}`.
pub fn disjoint_k4(c: usize) -> Result<EdgeOrderedGraph> {
    if c == 0 {
        return Err(EogError::InvalidParameter("disjoint_k4 needs c >= 1".into()));
    }
    let block = [(0, 1), (2, 3), (0, 2), (1, 3), (0, 3), (1, 2)];
    let edges = (0..c).flat_map(|i| block.iter().map(move |&(a, b)| (4 * i + a, 4 * i + b)));
    EdgeOrderedGraph::new(4 * c, edges)
}

/// Where the matching edges go relative to the two copies.
#[derive(Clone, Copy)]
enum MatchingSlot {
    Last,
    Middle,
}

fn doubling(i: usize, slot: MatchingSlot) -> EdgeOrderedGraph {
    let mut g = EdgeOrderedGraph::empty(1);
    for _ in 0..i {
        let half = g.vertex_count();
        let small: Vec<(usize, usize)> = g.edges().to_vec();
        let large: Vec<(usize, usize)> = small.iter().map(|&(a, b)| (a + half, b + half)).collect();
        let matching: Vec<(usize, usize)> = (0..half).map(|j| (j, j + half)).collect();
        let edges: Vec<(usize, usize)> = match slot {
            MatchingSlot::Last => [small, large, matching].concat(),
            MatchingSlot::Middle => [small, matching, large].concat(),
        };
        g = EdgeOrderedGraph::new(2 * half, edges).expect("doubling keeps edges valid");
    }
    g
}

/// `G_0` is a vertex; `G_{i+1}` is two copies of `G_i` (the second above the
/// first) followed by the matching `j <-> 2^i + j` in increasing `j`. Has
/// `2^i` vertices, `i 2^(i-1)` edges, and avoids `P_5^{1342}`.
pub fn recursive_g(i: usize) -> EdgeOrderedGraph {
    doubling(i, MatchingSlot::Last)
}

/// Like [`recursive_g`] but the matching sits between the two copies. Avoids
/// `P_5^{2143}`.
pub fn recursive_g_prime(i: usize) -> EdgeOrderedGraph {
    doubling(i, MatchingSlot::Middle)
}

/// Sided host for the one-sided avoidance lemma: `G_1` is one edge from a
/// left to a right vertex; `G_{i+1}` is a copy of `G_i`, then a matching from
/// the `k`-th left vertex of that copy to the `k`-th right vertex of a second
/// copy, then the second copy. Right-avoids `P_4^{132}` and `P_4^{213}`.
pub fn rightright(i: usize) -> Result<SidedPattern> {
    if i == 0 {
        return Err(EogError::InvalidParameter("rightright needs i >= 1".into()));
    }
    let mut edges = vec![(0usize, 1usize)];
    let mut sides = vec![Side::Left, Side::Right];
    for _ in 1..i {
        let half = sides.len();
        let lefts: Vec<usize> = (0..half).filter(|&v| sides[v] == Side::Left).collect();
        let rights: Vec<usize> = (0..half).filter(|&v| sides[v] == Side::Right).collect();
        let matching = lefts.iter().zip(&rights).map(|(&l, &r)| (l, r + half));
        let second: Vec<(usize, usize)> = edges.iter().map(|&(a, b)| (a + half, b + half)).collect();
        edges = edges.iter().copied().chain(matching).chain(second).collect();
        sides = sides.iter().chain(sides.clone().iter()).copied().collect();
    }
    let graph = EdgeOrderedGraph::new(sides.len(), edges)?;
    SidedPattern::new(graph, sides, None)
}

/// `D_n`: `x_1 x_2 < ... < x_1 x_n < x_2 x_n < ... < x_{n-1} x_n`, with `x_i`
/// as vertex `i - 1`.
pub fn d_graph(n: usize) -> Result<EdgeOrderedGraph> {
    if n < 2 {
        return Err(EogError::InvalidParameter("d_graph needs n >= 2".into()));
    }
    let first = (1..n).map(|j| (0, j));
    let last = (1..n - 1).map(|i| (i, n - 1));
    EdgeOrderedGraph::new(n, first.chain(last))
}

/// Label matrix of the `K_9` ordering whose auxiliary graphs are all
/// bipartite while it avoids the diamond. Diagonal entries are zero.
pub const K9_LABELS: [[u32; 9]; 9] = [
    [0, 1, 2, 3, 4, 33, 34, 35, 36],
    [1, 0, 26, 25, 29, 30, 5, 27, 8],
    [2, 26, 0, 24, 15, 7, 20, 18, 17],
    [3, 25, 24, 0, 11, 31, 22, 23, 9],
    [4, 29, 15, 11, 0, 10, 12, 13, 16],
    [33, 30, 7, 31, 10, 0, 32, 28, 6],
    [34, 5, 20, 22, 12, 32, 0, 21, 14],
    [35, 27, 18, 23, 13, 28, 21, 0, 19],
    [36, 8, 17, 9, 16, 6, 14, 19, 0],
];

/// `K_9` ordered by [`K9_LABELS`].
pub fn k9_labeling() -> EdgeOrderedGraph {
    let mut edges = vec![(0, 0); 36];
    for (i, row) in K9_LABELS.iter().enumerate() {
        for (j, &label) in row.iter().enumerate().skip(i + 1) {
            edges[label as usize - 1] = (i, j);
        }
    }
    EdgeOrderedGraph::new(9, edges).expect("K9 labels are a permutation of 1..=36")
}

/// `K_{2^(n-2)}` on binary strings of length `n - 2` (vertex = its value).
/// Edges are ordered by longest common prefix length, then by `|x - y|`,
/// then by the pair `(x, y)`, `x < y`.
pub fn explower_order(n: usize) -> Result<EdgeOrderedGraph> {
    if n < 2 {
        return Err(EogError::InvalidParameter("explower_order needs n >= 2".into()));
    }
    let bits = n - 2;
    if bits > 20 {
        return Err(EogError::InvalidParameter(format!("explower_order({n}) is too large")));
    }
    let size = 1usize << bits;
    let lcp = |x: usize, y: usize| -> usize {
        let diff = x ^ y;
        bits - (usize::BITS - diff.leading_zeros()) as usize
    };
    let mut keyed: Vec<(usize, usize, usize, usize)> = Vec::new();
    for x in 0..size {
        for y in x + 1..size {
            keyed.push((lcp(x, y), y - x, x, y));
        }
    }
    keyed.sort_unstable();
    EdgeOrderedGraph::new(size, keyed.into_iter().map(|(_, _, x, y)| (x, y)))
}

/// Embedding of `D_n` into `canonical_clique(n, kind)`: the clique vertex at
/// position `p` is the `p`-th vertex of the sequence `x_1, ..., x_n` (min and
/// max), `x_1, x_n, x_{n-1}, ..., x_2` (inverse min) or
/// `x_{n-1}, ..., x_1, x_n` (inverse max). Validated before returning.
pub fn embed_d_canonical(n: usize, kind: CliqueKind) -> Result<Embedding> {
    let d = d_graph(n)?;
    let sequence: Vec<usize> = match kind {
        CliqueKind::Min | CliqueKind::Max => (0..n).collect(),
        CliqueKind::InvMin => std::iter::once(0).chain((1..n).rev()).collect(),
        CliqueKind::InvMax => (0..n - 1).rev().chain(std::iter::once(n - 1)).collect(),
    };
    let mut vertex_map = vec![0; n];
    for (pos, &x) in sequence.iter().enumerate() {
        vertex_map[x] = pos;
    }
    let host = crate::canonical::canonical_clique(n, kind);
    let edge_map = d
        .edges()
        .iter()
        .map(|&(a, b)| host.position_of(vertex_map[a], vertex_map[b]).expect("cliques are complete"))
        .collect();
    let emb = Embedding { vertex_map, edge_map };
    if !is_valid_embedding(&host, &d, &emb) {
        return Err(EogError::InvalidParameter(format!("vertex order does not embed D_{n} into the {kind} clique")));
    }
    Ok(emb)
}

/// An ordering of the Turán graph `T(n, r)` avoiding `family`, obtained by
/// restricting an avoiding canonical order of `K_{r x s}`.
pub fn turan_witness(n: usize, r: usize, family: &[EdgeOrderedGraph]) -> Result<EdgeOrderedGraph> {
    if r < 2 || n < r {
        return Err(EogError::InvalidParameter(format!("turan_witness needs 2 <= r <= n, got n={n} r={r}")));
    }
    let (spec, _) = avoiding_canonical_order(family, r)?.ok_or(EogError::NoAvoidingOrder { k: r, n })?;
    let s = n.div_ceil(r).max(3);
    let big = spec.with_class_size(s).realize().ok_or(EogError::NoAvoidingOrder { k: r, n })?;
    let keep: Vec<usize> = (0..r)
        .flat_map(|class| {
            let size = n / r + usize::from(class < n % r);
            (0..size).map(move |j| class * s + j)
        })
        .collect();
    let witness = big.induced(&keep);
    if !avoids_family(&witness, family)? {
        return Err(EogError::NoAvoidingOrder { k: r, n });
    }
    Ok(witness)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_plus_matching_counts() {
        for n in 1..=9 {
            assert_eq!(star_plus_matching(n).unwrap().edge_count(), 3 * (n - 1) / 2);
        }
        assert_eq!(star_plus_matching(2).unwrap().edges(), &[(0, 1)]);
    }

    #[test]
    fn doubling_counts() {
        for i in 0..=6 {
            for g in [recursive_g(i), recursive_g_prime(i)] {
                assert_eq!(g.vertex_count(), 1 << i);
                assert_eq!(g.edge_count(), i * (1 << i) / 2);
            }
        }
    }

    #[test]
    fn rightright_counts() {
        let g1 = rightright(1).unwrap();
        assert_eq!(g1.graph().edge_count(), 1);
        assert_eq!(g1.sides(), &[Side::Left, Side::Right]);
        for i in 2..=6 {
            let g = rightright(i).unwrap();
            assert_eq!(g.graph().vertex_count(), 1 << i);
            assert_eq!(g.vertices_on(Side::Left).len(), 1 << (i - 1));
            assert_eq!(g.graph().edge_count(), (i + 1) << (i - 2));
        }
    }

    #[test]
    fn d_graph_shape() {
        assert_eq!(d_graph(4).unwrap().edges(), &[(0, 1), (0, 2), (0, 3), (1, 3), (2, 3)]);
        assert_eq!(d_graph(2).unwrap().edge_count(), 1);
        assert_eq!(d_graph(6).unwrap().edge_count(), 9);
    }

    #[test]
    fn k9_matrix_is_symmetric_with_a_known_checksum() {
        let mut sum = 0u64;
        let mut weighted = 0u64;
        for (i, row) in K9_LABELS.iter().enumerate() {
            assert_eq!(row[i], 0);
            for (j, &l) in row.iter().enumerate() {
                assert_eq!(l, K9_LABELS[j][i]);
                sum += l as u64;
                weighted += (9 * i + j) as u64 * l as u64;
            }
        }
        assert_eq!(sum, 2 * 666);
        assert_eq!(weighted, 54_260);
        let g = k9_labeling();
        assert_eq!(g.edges()[0], (0, 1));
        assert_eq!(g.edges()[35], (0, 8));
    }

    #[test]
    fn explower_small() {
        assert_eq!(explower_order(3).unwrap().edges(), &[(0, 1)]);
        // (00,01) and (10,11) share a prefix of length 1 and come last.
        assert_eq!(
            explower_order(4).unwrap().edges(),
            &[(1, 2), (0, 2), (1, 3), (0, 3), (0, 1), (2, 3)]
        );
    }

    #[test]
    fn embeddings_of_d_into_cliques() {
        for n in 2..=7 {
            for kind in CliqueKind::ALL {
                embed_d_canonical(n, kind).unwrap();
            }
        }
    }
}
