//! Edge-ordered graphs and the structural predicates used throughout the crate.
//!
//! An [`EdgeOrderedGraph`] stores its edges in increasing order: the edge at
//! position `t` has rank `t + 1`. Ranks are therefore always `1..=m`, and two
//! graphs whose labelings induce the same linear order are equal values.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{EogError, Result};

/// A simple graph on `0..n` whose edges carry a total order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EdgeOrderedGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl EdgeOrderedGraph {
    /// Builds a graph from edges listed in increasing order. Pairs are
    /// normalized to `u < v`.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for (a, b) in edges {
            for x in [a, b] {
                if x >= n {
                    return Err(EogError::EndpointOutOfRange { vertex: x, n });
                }
            }
            if a == b {
                return Err(EogError::SelfLoop { vertex: a });
            }
            let e = (a.min(b), a.max(b));
            if !seen.insert(e) {
                return Err(EogError::DuplicateEdge { u: e.0, v: e.1 });
            }
            out.push(e);
        }
        Ok(EdgeOrderedGraph { n, edges: out })
    }

    /// Builds a graph from arbitrary real labels; edges are sorted by label
    /// and ties are rejected.
    pub fn from_labels(n: usize, labelled: &[((usize, usize), f64)]) -> Result<Self> {
        let mut items = labelled.to_vec();
        items.sort_by(|a, b| a.1.total_cmp(&b.1));
        for w in items.windows(2) {
            if w[0].1 == w[1].1 {
                return Err(EogError::TiedLabels { label: w[0].1.to_string() });
            }
        }
        Self::new(n, items.into_iter().map(|(e, _)| e))
    }

    /// The graph on `n` vertices without edges.
    pub fn empty(n: usize) -> Self {
        EdgeOrderedGraph { n, edges: Vec::new() }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Edges in increasing order; position `t` has rank `t + 1`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Zero-based position of the edge `uv`, if present.
    pub fn position_of(&self, u: usize, v: usize) -> Option<usize> {
        let e = (u.min(v), u.max(v));
        self.edges.iter().position(|&f| f == e)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.position_of(u, v).is_some()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// Zero-based positions of the edges at `v`, increasing.
    pub fn incident_positions(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, &(a, b))| a == v || b == v)
            .map(|(t, _)| t)
            .collect()
    }

    /// Appends `uv` as the new largest edge.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        let mut edges = self.edges.clone();
        edges.push((u, v));
        Self::new(self.n, edges)
    }

    /// Adds `extra` isolated vertices.
    pub fn with_isolated(&self, extra: usize) -> Self {
        EdgeOrderedGraph { n: self.n + extra, edges: self.edges.clone() }
    }

    /// Renames vertex `v` to `perm[v]`; `perm` must be a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n, "relabel needs one image per vertex");
        let edges = self
            .edges
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (perm[a], perm[b]);
                (x.min(y), x.max(y))
            })
            .collect();
        EdgeOrderedGraph { n: self.n, edges }
    }

    /// The same underlying graph with the edge order reversed.
    pub fn reverse_order(&self) -> Self {
        let mut edges = self.edges.clone();
        edges.reverse();
        EdgeOrderedGraph { n: self.n, edges }
    }

    /// Subgraph induced by `vertices`, which become `0..len` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Self {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| index[a] != usize::MAX && index[b] != usize::MAX)
            .map(|&(a, b)| (index[a].min(index[b]), index[a].max(index[b])))
            .collect();
        EdgeOrderedGraph { n: vertices.len(), edges }
    }

    /// Keeps the edges at the given positions, in their existing order.
    pub fn edge_subgraph(&self, positions: &[usize]) -> Self {
        let mut keep: Vec<usize> = positions.to_vec();
        keep.sort_unstable();
        keep.dedup();
        EdgeOrderedGraph { n: self.n, edges: keep.into_iter().map(|t| self.edges[t]).collect() }
    }

    /// Drops vertices without edges, keeping the others in increasing order.
    pub fn without_isolated(&self) -> Self {
        let touched: Vec<usize> = (0..self.n).filter(|&v| self.degree(v) > 0).collect();
        self.induced(&touched)
    }

    /// Forgets the edge order.
    pub fn underlying(&self) -> SimpleGraph {
        SimpleGraph::new(self.n, self.edges.iter().copied())
    }

    /// Vertices whose incident edges occupy consecutive ranks. Isolated
    /// vertices are close.
    pub fn close_vertices(&self) -> BTreeSet<usize> {
        let mut lo = vec![usize::MAX; self.n];
        let mut hi = vec![0usize; self.n];
        let mut deg = vec![0usize; self.n];
        for (t, &(a, b)) in self.edges.iter().enumerate() {
            for x in [a, b] {
                lo[x] = lo[x].min(t);
                hi[x] = hi[x].max(t);
                deg[x] += 1;
            }
        }
        (0..self.n).filter(|&v| deg[v] == 0 || hi[v] - lo[v] + 1 == deg[v]).collect()
    }

    pub fn is_close(&self, v: usize) -> bool {
        let pos = self.incident_positions(v);
        pos.is_empty() || pos[pos.len() - 1] - pos[0] + 1 == pos.len()
    }

    /// True when the graph has an edge and every component with an edge is a star.
    pub fn is_star_forest(&self) -> bool {
        self.underlying().is_star_forest()
    }

    pub fn has_cycle_length_ge4(&self) -> bool {
        self.underlying().has_cycle_length_ge4()
    }

    /// Whether the underlying graph is complete.
    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n * self.n.saturating_sub(1) / 2
    }
}

impl fmt::Display for EdgeOrderedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::format::serialize_eog(self))
    }
}

/// Parses a permutation of `1..=k` given as a slice.
fn check_permutation(perm: &[usize]) -> Result<()> {
    let k = perm.len();
    let mut seen = vec![false; k + 1];
    for &p in perm {
        if p == 0 || p > k || seen[p] {
            return Err(EogError::NotAPermutation(perm.to_vec()));
        }
        seen[p] = true;
    }
    if k == 0 {
        return Err(EogError::NotAPermutation(Vec::new()));
    }
    Ok(())
}

fn edges_by_rank(pairs: Vec<(usize, usize)>, perm: &[usize]) -> Vec<(usize, usize)> {
    let mut slots = vec![(0, 0); perm.len()];
    for (i, e) in pairs.into_iter().enumerate() {
        slots[perm[i] - 1] = e;
    }
    slots
}

/// The path `0-1-...-k` whose edge `(i, i+1)` has rank `perm[i]`.
pub fn path_pattern(perm: &[usize]) -> Result<EdgeOrderedGraph> {
    check_permutation(perm)?;
    let k = perm.len();
    let pairs = (0..k).map(|i| (i, i + 1)).collect();
    EdgeOrderedGraph::new(k + 1, edges_by_rank(pairs, perm))
}

/// The cycle on `k >= 3` vertices whose edge `(i, i+1 mod k)` has rank `perm[i]`.
pub fn cycle_pattern(perm: &[usize]) -> Result<EdgeOrderedGraph> {
    check_permutation(perm)?;
    let k = perm.len();
    if k < 3 {
        return Err(EogError::InvalidParameter(format!("a cycle needs at least 3 edges, got {k}")));
    }
    let pairs = (0..k).map(|i| (i, (i + 1) % k)).collect();
    EdgeOrderedGraph::new(k, edges_by_rank(pairs, perm))
}

/// Side of a vertex in an edge-ordered bipartite graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

/// An edge-ordered bipartite graph with a fixed left/right split and an
/// optional root, used for left- and right-containment.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SidedPattern {
    graph: EdgeOrderedGraph,
    sides: Vec<Side>,
    root: Option<usize>,
}

impl SidedPattern {
    pub fn new(graph: EdgeOrderedGraph, sides: Vec<Side>, root: Option<usize>) -> Result<Self> {
        if sides.len() != graph.vertex_count() {
            return Err(EogError::InvalidParameter(format!(
                "{} side tags for {} vertices",
                sides.len(),
                graph.vertex_count()
            )));
        }
        if let Some(r) = root {
            if r >= graph.vertex_count() {
                return Err(EogError::EndpointOutOfRange { vertex: r, n: graph.vertex_count() });
            }
        }
        for &(u, v) in graph.edges() {
            if sides[u] == sides[v] {
                return Err(EogError::SideViolation { u, v });
            }
        }
        Ok(SidedPattern { graph, sides, root })
    }

    /// Roots `graph` at `root` and derives sides from a 2-colouring with the
    /// root on the left. Components without the root start on the left too.
    pub fn rooted(graph: EdgeOrderedGraph, root: usize) -> Result<Self> {
        if root >= graph.vertex_count() {
            return Err(EogError::EndpointOutOfRange { vertex: root, n: graph.vertex_count() });
        }
        let colours = graph.underlying().two_colouring_from(root).ok_or(EogError::NotBipartite)?;
        let sides = colours.into_iter().map(|c| if c { Side::Right } else { Side::Left }).collect();
        Self::new(graph, sides, Some(root))
    }

    /// A rooted path pattern: the root is the starting vertex `0`.
    pub fn rooted_path(perm: &[usize]) -> Result<Self> {
        Self::rooted(path_pattern(perm)?, 0)
    }

    pub fn graph(&self) -> &EdgeOrderedGraph {
        &self.graph
    }

    pub fn sides(&self) -> &[Side] {
        &self.sides
    }

    pub fn side(&self, v: usize) -> Side {
        self.sides[v]
    }

    pub fn root(&self) -> Option<usize> {
        self.root
    }

    pub fn vertices_on(&self, side: Side) -> Vec<usize> {
        (0..self.sides.len()).filter(|&v| self.sides[v] == side).collect()
    }
}

/// An unordered simple graph, stored as sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    adj: Vec<Vec<usize>>,
}

impl SimpleGraph {
    /// Duplicate pairs are merged; self-loops are ignored.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for (a, b) in edges {
            if a != b {
                adj[a].push(b);
                adj[b].push(a);
            }
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        SimpleGraph { adj }
    }

    pub fn complete(n: usize) -> Self {
        Self::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// The edge-ordered graph whose order is the sorted edge list.
    pub fn with_lexicographic_order(&self) -> EdgeOrderedGraph {
        EdgeOrderedGraph::new(self.vertex_count(), self.edges()).expect("simple graph edges are valid")
    }

    /// Connected components, each sorted.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.adj.len();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut stack = vec![s];
            let mut members = Vec::new();
            comp[s] = id;
            while let Some(v) = stack.pop() {
                members.push(v);
                for &w in &self.adj[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        stack.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// A proper 2-colouring (`false`/`true`), colouring `start` with `false`
    /// and every other component's least vertex with `false`.
    pub fn two_colouring_from(&self, start: usize) -> Option<Vec<bool>> {
        let n = self.adj.len();
        let mut colour: Vec<Option<bool>> = vec![None; n];
        let order = std::iter::once(start).chain((0..n).filter(|&v| v != start));
        for s in order {
            if colour[s].is_some() {
                continue;
            }
            colour[s] = Some(false);
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                let c = colour[v].unwrap();
                for &w in &self.adj[v] {
                    match colour[w] {
                        None => {
                            colour[w] = Some(!c);
                            stack.push(w);
                        }
                        Some(d) if d == c => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(colour.into_iter().map(|c| c.unwrap_or(false)).collect())
    }

    pub fn two_colouring(&self) -> Option<Vec<bool>> {
        if self.adj.is_empty() {
            return Some(Vec::new());
        }
        self.two_colouring_from(0)
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_colouring().is_some()
    }

    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.components().len() == self.vertex_count()
    }

    /// True when there is an edge and every component with an edge is a star.
    pub fn is_star_forest(&self) -> bool {
        if self.edge_count() == 0 {
            return false;
        }
        self.components().iter().all(|comp| {
            if comp.len() == 1 {
                return true;
            }
            let edges: usize = comp.iter().map(|&v| self.adj[v].len()).sum::<usize>() / 2;
            edges == comp.len() - 1 && comp.iter().any(|&v| self.adj[v].len() == edges)
        })
    }

    /// Whether some cycle has length at least four. A graph has none exactly
    /// when every biconnected block has at most three vertices.
    pub fn has_cycle_length_ge4(&self) -> bool {
        self.blocks().iter().any(|b| b.len() >= 4)
    }

    /// Vertex sets of the biconnected blocks (bridges included).
    pub fn blocks(&self) -> Vec<BTreeSet<usize>> {
        let n = self.adj.len();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut timer = 0usize;
        let mut edge_stack: Vec<(usize, usize)> = Vec::new();
        let mut blocks = Vec::new();

        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            // (vertex, parent, next neighbour index)
            let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
            while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
                if *idx < self.adj[v].len() {
                    let w = self.adj[v][*idx];
                    *idx += 1;
                    if w == parent {
                        continue;
                    }
                    if disc[w] == usize::MAX {
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        edge_stack.push((v, w));
                        stack.push((w, v, 0));
                    } else if disc[w] < disc[v] {
                        low[v] = low[v].min(disc[w]);
                        edge_stack.push((v, w));
                    }
                } else {
                    stack.pop();
                    if let Some(&(p, _, _)) = stack.last() {
                        low[p] = low[p].min(low[v]);
                        if low[v] >= disc[p] {
                            let mut block = BTreeSet::new();
                            while let Some((a, b)) = edge_stack.pop() {
                                block.insert(a);
                                block.insert(b);
                                if (a, b) == (p, v) {
                                    break;
                                }
                            }
                            blocks.push(block);
                        }
                    }
                }
            }
        }
        blocks
    }
}
