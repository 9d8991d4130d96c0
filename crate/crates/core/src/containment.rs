//! Order-preserving subgraph containment.
//!
//! Pattern edges are mapped in increasing rank to host edges of increasing
//! rank. Candidates for the next pattern edge depend on how many of its
//! endpoints are already placed: a direct lookup when both are, the incident
//! edges of one host vertex when one is, and a scan otherwise.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{EogError, Result};
use crate::graph::{EdgeOrderedGraph, Side, SidedPattern};

/// Witness of a containment. Positions are zero-based, so the host edge of
/// pattern rank `t + 1` has rank `edge_map[t] + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Embedding {
    pub vertex_map: Vec<usize>,
    pub edge_map: Vec<usize>,
}

const NONE: usize = usize::MAX;

enum RankLookup {
    Dense(Vec<u32>),
    Sparse(HashMap<(usize, usize), usize>),
}

/// Host graph with adjacency data prepared for repeated queries.
pub struct HostIndex<'a> {
    graph: &'a EdgeOrderedGraph,
    lookup: RankLookup,
    incident: Vec<Vec<usize>>,
}

impl<'a> HostIndex<'a> {
    pub fn new(graph: &'a EdgeOrderedGraph) -> Self {
        let n = graph.vertex_count();
        let mut incident = vec![Vec::new(); n];
        let lookup = if n <= 1024 {
            let mut dense = vec![u32::MAX; n * n];
            for (t, &(a, b)) in graph.edges().iter().enumerate() {
                dense[a * n + b] = t as u32;
                dense[b * n + a] = t as u32;
            }
            RankLookup::Dense(dense)
        } else {
            RankLookup::Sparse(graph.edges().iter().enumerate().map(|(t, &e)| (e, t)).collect())
        };
        for (t, &(a, b)) in graph.edges().iter().enumerate() {
            incident[a].push(t);
            incident[b].push(t);
        }
        HostIndex { graph, lookup, incident }
    }

    pub fn graph(&self) -> &EdgeOrderedGraph {
        self.graph
    }

    fn position(&self, a: usize, b: usize) -> Option<usize> {
        match &self.lookup {
            RankLookup::Dense(d) => {
                let r = d[a * self.graph.vertex_count() + b];
                (r != u32::MAX).then_some(r as usize)
            }
            RankLookup::Sparse(m) => m.get(&(a.min(b), a.max(b))).copied(),
        }
    }

    /// Number of edges at `v` with position at least `from`.
    fn degree_from(&self, v: usize, from: usize) -> usize {
        let inc = &self.incident[v];
        inc.len() - inc.partition_point(|&t| t < from)
    }
}

/// Pattern-side data reused by every search over the same pattern.
struct PatternPlan<'p> {
    pattern: &'p EdgeOrderedGraph,
    /// `remaining[t * n + v]`: pattern edges at `v` with index at least `t`.
    remaining: Vec<usize>,
}

impl<'p> PatternPlan<'p> {
    fn new(pattern: &'p EdgeOrderedGraph) -> Self {
        let n = pattern.vertex_count();
        let m = pattern.edge_count();
        let mut remaining = vec![0; (m + 1) * n];
        for t in (0..m).rev() {
            let (a, b) = pattern.edges()[t];
            for v in 0..n {
                remaining[t * n + v] = remaining[(t + 1) * n + v];
            }
            remaining[t * n + a] += 1;
            remaining[t * n + b] += 1;
        }
        PatternPlan { pattern, remaining }
    }

    fn remaining(&self, t: usize, v: usize) -> usize {
        self.remaining[t * self.pattern.vertex_count() + v]
    }
}

struct Matcher<'a, 'p, F> {
    host: &'a HostIndex<'a>,
    plan: &'a PatternPlan<'p>,
    allowed: F,
    vmap: Vec<usize>,
    used: Vec<bool>,
    emap: Vec<usize>,
    /// Keep searching for the lexicographically least `edge_map`.
    least: bool,
    best: Option<Embedding>,
}

impl<F: Fn(usize, usize) -> bool> Matcher<'_, '_, F> {
    fn can_place(&self, p: usize, h: usize, t: usize, pos: usize) -> bool {
        !self.used[h] && (self.allowed)(p, h) && self.host.degree_from(h, pos) >= self.plan.remaining(t, p)
    }

    fn place(&mut self, p: usize, h: usize) {
        self.vmap[p] = h;
        self.used[h] = true;
    }

    fn unplace(&mut self, p: usize) {
        self.used[self.vmap[p]] = false;
        self.vmap[p] = NONE;
    }

    /// Largest position worth trying at depth `t`: while the current prefix
    /// equals the best witness so far, later edges must not exceed it.
    fn cap(&self, t: usize) -> usize {
        match &self.best {
            Some(best) if self.emap[..t] == best.edge_map[..t] => best.edge_map[t],
            _ => usize::MAX,
        }
    }

    /// Records a complete map; true when the search should stop.
    fn finish(&mut self) -> bool {
        let Some(placed) = self.place_isolated() else {
            return false;
        };
        if self.best.as_ref().is_none_or(|b| self.emap < b.edge_map) {
            self.best = Some(Embedding { vertex_map: self.vmap.clone(), edge_map: self.emap.clone() });
        }
        if self.least {
            for p in placed {
                self.unplace(p);
            }
        }
        !self.least
    }

    fn dfs(&mut self, t: usize, lo: usize) -> bool {
        let m_p = self.plan.pattern.edge_count();
        if t == m_p {
            return self.finish();
        }
        let m_h = self.host.graph.edge_count();
        if lo + (m_p - t) > m_h {
            return false;
        }
        let hi = (m_h - (m_p - t)).min(self.cap(t));
        let (a, b) = self.plan.pattern.edges()[t];
        let (ha, hb) = (self.vmap[a], self.vmap[b]);
        match (ha != NONE, hb != NONE) {
            (true, true) => match self.host.position(ha, hb) {
                Some(pos) if pos >= lo && pos <= hi => {
                    self.emap.push(pos);
                    if self.dfs(t + 1, pos + 1) {
                        return true;
                    }
                    self.emap.pop();
                    false
                }
                _ => false,
            },
            (true, false) | (false, true) => {
                let (fixed, free) = if ha != NONE { (ha, b) } else { (hb, a) };
                let host = self.host;
                let inc = &host.incident[fixed];
                let start = inc.partition_point(|&x| x < lo);
                for &pos in &inc[start..] {
                    if pos > hi || pos > self.cap(t) {
                        break;
                    }
                    let (x, y) = self.host.graph.edges()[pos];
                    let other = if x == fixed { y } else { x };
                    if !self.can_place(free, other, t, pos) {
                        continue;
                    }
                    self.place(free, other);
                    self.emap.push(pos);
                    if self.dfs(t + 1, pos + 1) {
                        return true;
                    }
                    self.emap.pop();
                    self.unplace(free);
                }
                false
            }
            (false, false) => {
                for pos in lo..=hi {
                    if pos > self.cap(t) {
                        break;
                    }
                    let (x, y) = self.host.graph.edges()[pos];
                    for (u, v) in [(x, y), (y, x)] {
                        if pos > self.cap(t) {
                            break;
                        }
                        if !self.can_place(a, u, t, pos) || !self.can_place(b, v, t, pos) {
                            continue;
                        }
                        self.place(a, u);
                        self.place(b, v);
                        self.emap.push(pos);
                        if self.dfs(t + 1, pos + 1) {
                            return true;
                        }
                        self.emap.pop();
                        self.unplace(b);
                        self.unplace(a);
                    }
                }
                false
            }
        }
    }

    /// Sends isolated pattern vertices to the smallest unused allowed hosts;
    /// returns the vertices placed.
    fn place_isolated(&mut self) -> Option<Vec<usize>> {
        let mut placed = Vec::new();
        for p in 0..self.vmap.len() {
            if self.vmap[p] != NONE {
                continue;
            }
            let host_n = self.host.graph.vertex_count();
            match (0..host_n).find(|&h| !self.used[h] && (self.allowed)(p, h)) {
                Some(h) => {
                    self.place(p, h);
                    placed.push(p);
                }
                None => {
                    for q in placed {
                        self.unplace(q);
                    }
                    return None;
                }
            }
        }
        Some(placed)
    }
}

fn run_search(
    host: &HostIndex<'_>,
    plan: &PatternPlan<'_>,
    seeds: &[(usize, usize)],
    least: bool,
    allowed: impl Fn(usize, usize) -> bool,
) -> Option<Embedding> {
    let pattern = plan.pattern;
    if pattern.vertex_count() > host.graph.vertex_count() || pattern.edge_count() > host.graph.edge_count() {
        return None;
    }
    let mut m = Matcher {
        host,
        plan,
        allowed,
        vmap: vec![NONE; pattern.vertex_count()],
        used: vec![false; host.graph.vertex_count()],
        emap: Vec::with_capacity(pattern.edge_count()),
        least,
        best: None,
    };
    for &(p, h) in seeds {
        if m.used[h] || !(m.allowed)(p, h) {
            return None;
        }
        m.place(p, h);
    }
    m.dfs(0, 0);
    m.best
}

fn require_edges(pattern: &EdgeOrderedGraph) -> Result<()> {
    if pattern.is_empty() {
        Err(EogError::EmptyPattern)
    } else {
        Ok(())
    }
}

/// A witness that `host` contains `pattern`, or `None` if it avoids it. The
/// witness has the lexicographically least `edge_map`.
pub fn contains(host: &EdgeOrderedGraph, pattern: &EdgeOrderedGraph) -> Result<Option<Embedding>> {
    require_edges(pattern)?;
    let index = HostIndex::new(host);
    Ok(contains_indexed(&index, pattern))
}

/// [`contains`] against a prepared host.
pub fn contains_indexed(host: &HostIndex<'_>, pattern: &EdgeOrderedGraph) -> Option<Embedding> {
    let plan = PatternPlan::new(pattern);
    run_search(host, &plan, &[], true, |_, _| true)
}

fn found_in(host: &HostIndex<'_>, pattern: &EdgeOrderedGraph) -> bool {
    let plan = PatternPlan::new(pattern);
    run_search(host, &plan, &[], false, |_, _| true).is_some()
}

/// Whether some copy of `pattern` in `host` uses the largest host edge.
///
/// When every proper rank-prefix of `host` avoids the pattern, this decides
/// containment for the whole host.
pub fn contains_using_last(host: &HostIndex<'_>, pattern: &EdgeOrderedGraph) -> bool {
    let m_h = host.graph.edge_count();
    let m_p = pattern.edge_count();
    if m_h == 0 || m_p == 0 || m_p > m_h {
        return false;
    }
    let plan = PatternPlan::new(pattern);
    let (x, y) = host.graph.edges()[m_h - 1];
    let (a, b) = pattern.edges()[m_p - 1];
    [(x, y), (y, x)]
        .into_iter()
        .any(|(u, v)| run_search(host, &plan, &[(a, u), (b, v)], false, |_, _| true).is_some())
}

/// Whether `host` avoids every member of `family`.
pub fn avoids_family(host: &EdgeOrderedGraph, family: &[EdgeOrderedGraph]) -> Result<bool> {
    for p in family {
        require_edges(p)?;
    }
    let index = HostIndex::new(host);
    Ok(family.iter().all(|p| !found_in(&index, p)))
}

/// Rooted containment in a sided host: the root lands on `mode`, every
/// pattern vertex on the root's side lands on `mode` as well and the others
/// on the opposite side.
pub fn side_contains(host: &SidedPattern, pattern: &SidedPattern, mode: Side) -> Result<Option<Embedding>> {
    require_edges(pattern.graph())?;
    let root = pattern.root().ok_or(EogError::UnrootedPattern)?;
    let root_side = pattern.side(root);
    let index = HostIndex::new(host.graph());
    let plan = PatternPlan::new(pattern.graph());
    let allowed = |p: usize, h: usize| {
        let want = if pattern.side(p) == root_side { mode } else { mode.flip() };
        host.side(h) == want
    };
    Ok(run_search(&index, &plan, &[], true, allowed))
}

/// Checks that `emb` is a valid embedding of `pattern` into `host`.
pub fn is_valid_embedding(host: &EdgeOrderedGraph, pattern: &EdgeOrderedGraph, emb: &Embedding) -> bool {
    let n_h = host.vertex_count();
    if emb.vertex_map.len() != pattern.vertex_count() || emb.edge_map.len() != pattern.edge_count() {
        return false;
    }
    let mut seen = vec![false; n_h];
    for &h in &emb.vertex_map {
        if h >= n_h || seen[h] {
            return false;
        }
        seen[h] = true;
    }
    if emb.edge_map.windows(2).any(|w| w[0] >= w[1]) {
        return false;
    }
    pattern.edges().iter().zip(&emb.edge_map).all(|(&(a, b), &pos)| {
        let (x, y) = (emb.vertex_map[a], emb.vertex_map[b]);
        host.edges().get(pos) == Some(&(x.min(y), x.max(y)))
    })
}
