//! Order chromatic number of finite families.
//!
//! A family has order chromatic number greater than `k` exactly when some
//! canonical edge-order of `K_{k x v}` avoids it, where `v` bounds the number
//! of vertices of its members; it is infinite exactly when one of the four
//! canonical orders of `K_v` avoids it.

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canonical::{canonical_clique, canonical_specs, knn_can, CanonicalSpec, CliqueKind, DEFAULT_NODE_LIMIT};
use crate::containment::{avoids_family, contains};
use crate::error::{EogError, Result};
use crate::graph::{EdgeOrderedGraph, SimpleGraph};
use crate::key::{canonical_key, CanonicalKey};

/// Outcome of [`order_chromatic`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ChiResult {
    Exactly(usize),
    /// Larger than the given bound, possibly infinite.
    ExceedsBudget(usize),
    Infinite,
}

impl ChiResult {
    /// Comparable position: exact values first, then unknown, then infinity.
    fn rank(self) -> (u8, usize) {
        match self {
            ChiResult::Exactly(k) => (0, k),
            ChiResult::ExceedsBudget(k) => (1, k),
            ChiResult::Infinite => (2, 0),
        }
    }
}

impl fmt::Display for ChiResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChiResult::Exactly(k) => write!(f, "{k}"),
            ChiResult::ExceedsBudget(k) => write!(f, ">{k}"),
            ChiResult::Infinite => f.write_str("inf"),
        }
    }
}

fn max_vertices(family: &[EdgeOrderedGraph]) -> Result<usize> {
    if family.is_empty() {
        return Err(EogError::InvalidParameter("family must not be empty".into()));
    }
    if family.iter().any(EdgeOrderedGraph::is_empty) {
        return Err(EogError::EmptyPattern);
    }
    Ok(family.iter().map(EdgeOrderedGraph::vertex_count).max().unwrap_or(0))
}

/// Whether `K_{v,v}^can` contains `h`, `v = |V(h)|`, i.e. the order chromatic
/// number of `h` is 2.
pub fn is_chi_two(h: &EdgeOrderedGraph) -> Result<bool> {
    Ok(contains(knn_can(h.vertex_count()).graph(), h)?.is_some())
}

/// The canonical clique orders on `v` vertices that avoid `family`.
pub fn avoiding_clique_kinds(family: &[EdgeOrderedGraph]) -> Result<Vec<CliqueKind>> {
    let v = max_vertices(family)?;
    let mut out = Vec::new();
    for kind in CliqueKind::ALL {
        if avoids_family(&canonical_clique(v, kind), family)? {
            out.push(kind);
        }
    }
    Ok(out)
}

/// Whether the order chromatic number of `family` is infinite.
pub fn is_chi_infinite(family: &[EdgeOrderedGraph]) -> Result<bool> {
    Ok(!avoiding_clique_kinds(family)?.is_empty())
}

/// The first canonical order of `K_{k x v}` (in enumeration order) avoiding
/// `family`, with `v = max(|V|, 3)`.
pub fn avoiding_canonical_order(
    family: &[EdgeOrderedGraph],
    k: usize,
) -> Result<Option<(CanonicalSpec, EdgeOrderedGraph)>> {
    if k < 2 {
        return Err(EogError::InvalidParameter(format!("k must be at least 2, got {k}")));
    }
    let v = max_vertices(family)?.max(3);
    let specs = canonical_specs(k, v, DEFAULT_NODE_LIMIT)?;
    let found = specs.par_iter().find_map_first(|shape| {
        let spec = shape.with_class_size(v);
        let g = spec.realize()?;
        match avoids_family(&g, family) {
            Ok(true) => Some((spec, g)),
            _ => None,
        }
    });
    Ok(found)
}

/// Whether the order chromatic number of `family` exceeds `k`.
pub fn chi_exceeds(family: &[EdgeOrderedGraph], k: usize) -> Result<bool> {
    Ok(avoiding_canonical_order(family, k)?.is_some())
}

/// Order chromatic number of `family`, searching `k` up to `kmax`.
pub fn order_chromatic(family: &[EdgeOrderedGraph], kmax: usize) -> Result<ChiResult> {
    if kmax < 2 {
        return Err(EogError::InvalidParameter(format!("kmax must be at least 2, got {kmax}")));
    }
    if is_chi_infinite(family)? {
        return Ok(ChiResult::Infinite);
    }
    for k in 2..=kmax {
        if !chi_exceeds(family, k)? {
            return Ok(ChiResult::Exactly(k));
        }
    }
    Ok(ChiResult::ExceedsBudget(kmax))
}

/// Whether the underlying graph has a proper 2-colouring in which one colour
/// class consists of close vertices. Each component may pick its own class.
pub fn has_close_class_2coloring(h: &EdgeOrderedGraph) -> bool {
    let under = h.underlying();
    let Some(colour) = under.two_colouring() else {
        return false;
    };
    let close = h.close_vertices();
    under.components().iter().all(|comp| {
        [false, true]
            .into_iter()
            .any(|c| comp.iter().filter(|&&v| colour[v] == c).all(|v| close.contains(v)))
    })
}

fn require_complete(k: &EdgeOrderedGraph) -> Result<()> {
    if k.is_complete() {
        Ok(())
    } else {
        Err(EogError::NotComplete)
    }
}

/// `G_x`: on the vertices other than `x` (kept as an isolated vertex), the
/// edges `yz` whose rank lies strictly between the ranks of `xy` and `xz`.
pub fn auxiliary_graph(k: &EdgeOrderedGraph, x: usize) -> Result<SimpleGraph> {
    require_complete(k)?;
    let n = k.vertex_count();
    if x >= n {
        return Err(EogError::EndpointOutOfRange { vertex: x, n });
    }
    let mut rank = vec![0usize; n * n];
    for (t, &(a, b)) in k.edges().iter().enumerate() {
        rank[a * n + b] = t;
        rank[b * n + a] = t;
    }
    let mut edges = Vec::new();
    for y in 0..n {
        for z in y + 1..n {
            if y == x || z == x {
                continue;
            }
            let (ry, rz, ryz) = (rank[x * n + y], rank[x * n + z], rank[y * n + z]);
            if ry.min(rz) < ryz && ryz < ry.max(rz) {
                edges.push((y, z));
            }
        }
    }
    Ok(SimpleGraph::new(n, edges))
}

/// Whether `k` avoids `D_n` and all its auxiliary graphs are bipartite, which
/// certifies that the order chromatic number of `D_n` exceeds `|V(k)|`.
pub fn dialemma_check(k: &EdgeOrderedGraph, n: usize) -> Result<bool> {
    require_complete(k)?;
    let d = crate::constructions::d_graph(n)?;
    if contains(k, &d)?.is_some() {
        return Ok(false);
    }
    for x in 0..k.vertex_count() {
        if !auxiliary_graph(k, x)?.is_bipartite() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One isomorphism class of orderings found by [`labeling_scan`].
#[derive(Clone, Debug)]
pub struct ScannedLabeling {
    pub graph: EdgeOrderedGraph,
    pub key: CanonicalKey,
    /// Number of the `m!` orderings falling in this class.
    pub multiplicity: usize,
    pub chi: ChiResult,
}

/// Classification of every ordering of a graph.
#[derive(Clone, Debug)]
pub struct LabelingScan {
    pub classes: Vec<ScannedLabeling>,
    pub kmax: usize,
}

impl LabelingScan {
    /// Least order chromatic number over all orderings.
    pub fn chi_minus(&self) -> Option<ChiResult> {
        self.classes.iter().map(|c| c.chi).min_by_key(|c| c.rank())
    }

    /// Largest order chromatic number over all orderings.
    pub fn chi_plus(&self) -> Option<ChiResult> {
        self.classes.iter().map(|c| c.chi).max_by_key(|c| c.rank())
    }
}

/// Largest edge count accepted by [`labeling_scan`] and [`all_orderings`].
pub const MAX_SCAN_EDGES: usize = 8;

/// Every edge ordering of the underlying graph of `g`, one representative per
/// isomorphism class with its multiplicity, in order of first discovery
/// (orderings are generated in lexicographic permutation order).
pub fn all_orderings(g: &EdgeOrderedGraph) -> Result<Vec<(EdgeOrderedGraph, usize)>> {
    let m = g.edge_count();
    if m > MAX_SCAN_EDGES {
        return Err(EogError::InvalidParameter(format!(
            "{m} edges is too many to scan (limit {MAX_SCAN_EDGES})"
        )));
    }
    let base = g.edges().to_vec();
    let mut perm: Vec<usize> = (0..m).collect();
    let mut index: HashMap<CanonicalKey, usize> = HashMap::new();
    let mut out: Vec<(EdgeOrderedGraph, usize)> = Vec::new();
    loop {
        let h = EdgeOrderedGraph::new(g.vertex_count(), perm.iter().map(|&i| base[i]))?;
        let key = canonical_key(&h);
        match index.get(&key) {
            Some(&i) => out[i].1 += 1,
            None => {
                index.insert(key, out.len());
                out.push((h, 1));
            }
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Ok(out)
}

/// Advances to the next permutation in lexicographic order.
pub(crate) fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).expect("a larger element exists");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Classifies every ordering of the underlying graph of `g` (up to
/// isomorphism) by its order chromatic number, searching up to `kmax`.
pub fn labeling_scan(g: &EdgeOrderedGraph, kmax: usize) -> Result<LabelingScan> {
    let classes = all_orderings(g)?
        .into_iter()
        .map(|(graph, multiplicity)| {
            let chi = order_chromatic(std::slice::from_ref(&graph), kmax)?;
            Ok(ScannedLabeling { key: canonical_key(&graph), graph, multiplicity, chi })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(LabelingScan { classes, kmax })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle_pattern, path_pattern};

    #[test]
    fn permutations_in_order() {
        let mut p = vec![0, 1, 2];
        let mut seen = vec![p.clone()];
        while next_permutation(&mut p) {
            seen.push(p.clone());
        }
        assert_eq!(seen.len(), 6);
        assert_eq!(seen[1], vec![0, 2, 1]);
        assert_eq!(seen[5], vec![2, 1, 0]);
    }

    #[test]
    fn single_edge_family() {
        let e = path_pattern(&[1]).unwrap();
        assert!(is_chi_two(&e).unwrap());
        assert!(!is_chi_infinite(std::slice::from_ref(&e)).unwrap());
        assert_eq!(order_chromatic(&[e], 4).unwrap(), ChiResult::Exactly(2));
    }

    #[test]
    fn increasing_c4() {
        let c = cycle_pattern(&[1, 2, 3, 4]).unwrap();
        assert!(!is_chi_two(&c).unwrap());
        assert!(has_close_class_2coloring(&c));
        assert_eq!(order_chromatic(&[c], 3).unwrap(), ChiResult::Infinite);
    }

    #[test]
    fn triangle_has_no_close_class() {
        let t = cycle_pattern(&[1, 2, 3]).unwrap();
        assert!(!has_close_class_2coloring(&t));
    }

    #[test]
    fn auxiliary_graphs_of_triangles_are_tiny() {
        let t = cycle_pattern(&[1, 2, 3]).unwrap();
        for x in 0..3 {
            assert!(auxiliary_graph(&t, x).unwrap().edge_count() <= 1);
        }
        assert_eq!(auxiliary_graph(&path_pattern(&[1, 2]).unwrap(), 0), Err(EogError::NotComplete));
    }

    #[test]
    fn empty_family_is_rejected() {
        assert!(order_chromatic(&[], 3).is_err());
        assert_eq!(order_chromatic(&[EdgeOrderedGraph::empty(2)], 3), Err(EogError::EmptyPattern));
    }
}
