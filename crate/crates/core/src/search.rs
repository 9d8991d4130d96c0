//! Exact search for small instances: `lex(n, family)`, avoiding orderings of a
//! fixed graph, and the classical Turán number.

use std::collections::HashSet;
use std::hash::Hash;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::containment::{contains_using_last, HostIndex};
use crate::error::{EogError, Result};
use crate::graph::{EdgeOrderedGraph, SimpleGraph};
use crate::key::{canonical_key, CanonicalKey};

/// Resource limits for one search call.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    pub max_nodes: u64,
    pub max_time: Option<Duration>,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_nodes: 100_000_000, max_time: Some(Duration::from_secs(60)) }
    }
}

impl Budget {
    pub fn nodes(max_nodes: u64) -> Self {
        Budget { max_nodes, max_time: None }
    }

    pub fn with_time(mut self, limit: Duration) -> Self {
        self.max_time = Some(limit);
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SearchStatus {
    Exact,
    /// The value is a lower bound only.
    BudgetExceeded,
}

/// Result of [`lex_exact`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LexResult {
    pub value: usize,
    pub witness: EdgeOrderedGraph,
    pub status: SearchStatus,
    pub nodes: u64,
}

impl LexResult {
    pub fn is_exact(&self) -> bool {
        self.status == SearchStatus::Exact
    }
}

struct Meter {
    budget: Budget,
    start: Instant,
    nodes: u64,
    exhausted: bool,
}

impl Meter {
    fn new(budget: Budget) -> Self {
        Meter { budget, start: Instant::now(), nodes: 0, exhausted: false }
    }

    /// Counts a node; false once the budget is spent.
    fn tick(&mut self) -> bool {
        if self.exhausted {
            return false;
        }
        self.nodes += 1;
        let out_of_time = self.nodes.is_multiple_of(1024)
            && self.budget.max_time.is_some_and(|limit| self.start.elapsed() > limit);
        if self.nodes > self.budget.max_nodes || out_of_time {
            self.exhausted = true;
        }
        !self.exhausted
    }
}

/// A set that keeps at most two generations of entries; when the current
/// generation fills up the older one is dropped. Forgetting entries only
/// costs repeated work.
struct GenerationalSet<T> {
    current: HashSet<T>,
    previous: HashSet<T>,
    capacity: usize,
}

impl<T: Hash + Eq> GenerationalSet<T> {
    fn new(capacity: usize) -> Self {
        GenerationalSet { current: HashSet::new(), previous: HashSet::new(), capacity }
    }

    /// Inserts `x`; false if it was already present.
    fn insert(&mut self, x: T) -> bool {
        if self.current.contains(&x) || self.previous.contains(&x) {
            return false;
        }
        if self.current.len() >= self.capacity {
            self.previous = std::mem::take(&mut self.current);
        }
        self.current.insert(x);
        true
    }
}

/// Entries per generation in the transposition tables.
pub const TABLE_CAPACITY: usize = 1 << 22;

fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

/// Whether appending the largest edge of `g` creates a member of `family`,
/// given that `g` without that edge avoids it.
fn last_edge_hits(g: &EdgeOrderedGraph, family: &[EdgeOrderedGraph]) -> bool {
    let index = HostIndex::new(g);
    family.iter().any(|p| contains_using_last(&index, p))
}

struct LexSearch<'a> {
    family: &'a [EdgeOrderedGraph],
    meter: Meter,
    seen: GenerationalSet<CanonicalKey>,
    best: usize,
    witness: EdgeOrderedGraph,
    ceiling: usize,
}

impl LexSearch<'_> {
    /// `g` avoids the family; `addable` lists the pairs whose addition as a
    /// new largest edge keeps it that way.
    fn explore(&mut self, g: &EdgeOrderedGraph, addable: &[(usize, usize)]) {
        if g.edge_count() > self.best {
            self.best = g.edge_count();
            self.witness = g.clone();
        }
        // Pairs that cannot be appended now can never be appended later, since
        // the current graph stays a rank-prefix of every extension.
        if self.best == self.ceiling || g.edge_count() + addable.len() <= self.best {
            return;
        }
        for (i, &(u, v)) in addable.iter().enumerate() {
            if !self.meter.tick() {
                return;
            }
            let child = g.with_edge(u, v).expect("addable pairs are non-edges");
            if !self.seen.insert(canonical_key(&child)) {
                continue;
            }
            let rest: Vec<(usize, usize)> = addable
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &e)| e)
                .filter(|&(a, b)| !last_edge_hits(&child.with_edge(a, b).expect("pairs are non-edges"), self.family))
                .collect();
            self.explore(&child, &rest);
            if self.best == self.ceiling || self.meter.exhausted {
                return;
            }
        }
    }
}

fn check_family(family: &[EdgeOrderedGraph]) -> Result<()> {
    if family.is_empty() {
        return Err(EogError::InvalidParameter("family must not be empty".into()));
    }
    if family.iter().any(EdgeOrderedGraph::is_empty) {
        return Err(EogError::EmptyPattern);
    }
    Ok(())
}

/// The largest number of edges of an edge-ordered graph on `n` vertices that
/// avoids every member of `family`, with a witness.
///
/// Graphs are grown by appending a new largest edge, since every rank-prefix
/// of an avoiding graph avoids the family too; isomorphic states are visited
/// once.
pub fn lex_exact(n: usize, family: &[EdgeOrderedGraph], budget: Budget) -> Result<LexResult> {
    check_family(family)?;
    let ceiling = n * n.saturating_sub(1) / 2;
    let relevant: Vec<EdgeOrderedGraph> = family
        .iter()
        .filter(|p| p.vertex_count() <= n && p.edge_count() <= ceiling)
        .cloned()
        .collect();
    if relevant.is_empty() {
        let witness = SimpleGraph::complete(n).with_lexicographic_order();
        return Ok(LexResult { value: ceiling, witness, status: SearchStatus::Exact, nodes: 0 });
    }
    let empty = EdgeOrderedGraph::empty(n);
    let addable: Vec<(usize, usize)> = all_pairs(n)
        .into_iter()
        .filter(|&(a, b)| !last_edge_hits(&empty.with_edge(a, b).expect("valid pair"), &relevant))
        .collect();
    let mut search = LexSearch {
        family: &relevant,
        meter: Meter::new(budget),
        seen: GenerationalSet::new(TABLE_CAPACITY),
        best: 0,
        witness: empty.clone(),
        ceiling,
    };
    search.explore(&empty, &addable);
    let status = if search.meter.exhausted { SearchStatus::BudgetExceeded } else { SearchStatus::Exact };
    Ok(LexResult { value: search.best, witness: search.witness, status, nodes: search.meter.nodes })
}

/// Largest edge count accepted by [`can_avoid`].
pub const MAX_CAN_AVOID_EDGES: usize = 16;

/// Automorphisms of `g` as vertex permutations (identity only when `g` has
/// more than 8 vertices).
fn automorphisms(g: &SimpleGraph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let identity: Vec<usize> = (0..n).collect();
    if n > 8 {
        return vec![identity];
    }
    let mut out = Vec::new();
    let mut perm = identity;
    loop {
        if g.edges().iter().all(|&(a, b)| g.has_edge(perm[a], perm[b])) {
            out.push(perm.clone());
        }
        if !crate::orderchrom::next_permutation(&mut perm) {
            break;
        }
    }
    out
}

struct AvoidSearch<'a> {
    edges: Vec<(usize, usize)>,
    n: usize,
    family: &'a [EdgeOrderedGraph],
    /// `edge_perms[s][i]`: index of the image of edge `i` under automorphism `s`.
    edge_perms: Vec<Vec<usize>>,
    failed: GenerationalSet<Vec<usize>>,
    meter: Meter,
}

impl AvoidSearch<'_> {
    fn orbit_key(&self, prefix: &[usize]) -> Vec<usize> {
        self.edge_perms
            .iter()
            .map(|s| prefix.iter().map(|&i| s[i]).collect::<Vec<_>>())
            .min()
            .unwrap_or_default()
    }

    fn extend(&mut self, prefix: &mut Vec<usize>, used: &mut Vec<bool>) -> Option<Vec<usize>> {
        if prefix.len() == self.edges.len() {
            return Some(prefix.clone());
        }
        for i in 0..self.edges.len() {
            if used[i] || !self.meter.tick() {
                continue;
            }
            prefix.push(i);
            let g = EdgeOrderedGraph::new(self.n, prefix.iter().map(|&j| self.edges[j])).expect("edges of a graph");
            if !last_edge_hits(&g, self.family) && self.failed.insert(self.orbit_key(prefix)) {
                used[i] = true;
                if let Some(found) = self.extend(prefix, used) {
                    return Some(found);
                }
                used[i] = false;
            }
            prefix.pop();
        }
        None
    }
}

/// An ordering of the edges of `g` (its current order is ignored) that avoids
/// `family`, or `None` if there is none.
pub fn can_avoid(g: &EdgeOrderedGraph, family: &[EdgeOrderedGraph], budget: Budget) -> Result<Option<EdgeOrderedGraph>> {
    check_family(family)?;
    let m = g.edge_count();
    if m > MAX_CAN_AVOID_EDGES {
        return Err(EogError::InvalidParameter(format!(
            "{m} edges is too many for can_avoid (limit {MAX_CAN_AVOID_EDGES})"
        )));
    }
    let under = g.underlying();
    let edges = under.edges();
    let edge_perms = automorphisms(&under)
        .into_iter()
        .map(|perm| {
            edges
                .iter()
                .map(|&(a, b)| {
                    let (x, y) = (perm[a].min(perm[b]), perm[a].max(perm[b]));
                    edges.binary_search(&(x, y)).expect("automorphisms map edges to edges")
                })
                .collect()
        })
        .collect();
    let mut search = AvoidSearch {
        edges,
        n: g.vertex_count(),
        family,
        edge_perms,
        failed: GenerationalSet::new(TABLE_CAPACITY),
        meter: Meter::new(budget),
    };
    let found = search.extend(&mut Vec::with_capacity(m), &mut vec![false; m]);
    if search.meter.exhausted && found.is_none() {
        return Err(EogError::BudgetExceeded { nodes: search.meter.nodes });
    }
    Ok(found.map(|order| {
        EdgeOrderedGraph::new(g.vertex_count(), order.into_iter().map(|i| search.edges[i])).expect("edges of a graph")
    }))
}

/// Whether `g` has a subgraph isomorphic to `h` that uses the edge `(u, v)`.
fn has_copy_through(g: &SimpleGraph, h: &SimpleGraph, u: usize, v: usize) -> bool {
    let hn = h.vertex_count();
    let mut order: Vec<usize> = Vec::with_capacity(hn);
    let Some((a, _)) = h.edges().first().copied() else {
        return false;
    };
    // Visit `h` so that, within a component, each vertex after the first has
    // an earlier neighbour.
    let mut seen = vec![false; hn];
    for start in std::iter::once(a).chain(0..hn) {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            order.push(x);
            for &y in h.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
    }
    let mut map = vec![usize::MAX; hn];
    let mut used = vec![false; g.vertex_count()];
    for (x, y) in h.edges() {
        for (gx, gy) in [(u, v), (v, u)] {
            map[x] = gx;
            map[y] = gy;
            used[gx] = true;
            used[gy] = true;
            if extend_unordered(g, h, &order, 0, &mut map, &mut used) {
                return true;
            }
            used[gx] = false;
            used[gy] = false;
            map[x] = usize::MAX;
            map[y] = usize::MAX;
        }
    }
    false
}

fn extend_unordered(
    g: &SimpleGraph,
    h: &SimpleGraph,
    order: &[usize],
    i: usize,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    let Some(&x) = order.get(i) else {
        return true;
    };
    if map[x] != usize::MAX {
        return h.neighbors(x).iter().all(|&y| map[y] == usize::MAX || g.has_edge(map[x], map[y]))
            && extend_unordered(g, h, order, i + 1, map, used);
    }
    for c in 0..g.vertex_count() {
        if used[c] {
            continue;
        }
        if h.neighbors(x).iter().any(|&y| map[y] != usize::MAX && !g.has_edge(c, map[y])) {
            continue;
        }
        map[x] = c;
        used[c] = true;
        if extend_unordered(g, h, order, i + 1, map, used) {
            return true;
        }
        map[x] = usize::MAX;
        used[c] = false;
    }
    false
}

/// Largest vertex count accepted by [`ex_exact`].
pub const MAX_EX_VERTICES: usize = 8;

/// Classical Turán number: the most edges of a simple graph on `n` vertices
/// without a subgraph isomorphic to `h`.
pub fn ex_exact(n: usize, h: &SimpleGraph) -> Result<usize> {
    if n > MAX_EX_VERTICES {
        return Err(EogError::InvalidParameter(format!("ex_exact is limited to n <= {MAX_EX_VERTICES}")));
    }
    let touched: Vec<usize> = (0..h.vertex_count()).filter(|&v| !h.neighbors(v).is_empty()).collect();
    if touched.is_empty() {
        return Err(EogError::EmptyPattern);
    }
    let h = SimpleGraph::new(
        touched.len(),
        h.edges().into_iter().map(|(a, b)| {
            (touched.binary_search(&a).expect("touched"), touched.binary_search(&b).expect("touched"))
        }),
    );
    let pairs = all_pairs(n);
    if h.vertex_count() > n {
        return Ok(pairs.len());
    }
    let mut best = 0;
    let mut g = SimpleGraph::new(n, []);
    ex_dfs(&pairs, 0, &mut g, &h, &mut best);
    Ok(best)
}

fn ex_dfs(pairs: &[(usize, usize)], i: usize, g: &mut SimpleGraph, h: &SimpleGraph, best: &mut usize) {
    let m = g.edge_count();
    *best = (*best).max(m);
    if m + (pairs.len() - i) <= *best {
        return;
    }
    let (u, v) = pairs[i];
    let with = SimpleGraph::new(g.vertex_count(), g.edges().into_iter().chain([(u, v)]));
    if !has_copy_through(&with, h, u, v) {
        let mut with = with;
        ex_dfs(pairs, i + 1, &mut with, h, best);
    }
    ex_dfs(pairs, i + 1, g, h, best);
}
