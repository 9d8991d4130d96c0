//! Canonical edge-orders of `K_n`, `K_{n,n}` and `K_{k x n}`.
//!
//! In `K_{k x n}` the vertex `v_{i,j}` (class `i`, index `j`, both zero-based)
//! is vertex `i * n + j`. A *part* is the complete bipartite graph between two
//! classes `i1 < i2`; parts are numbered in lexicographic order of `(i1, i2)`.

use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{EogError, Result};
use crate::graph::{EdgeOrderedGraph, Side, SidedPattern};

/// The four canonical labelings of a complete graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CliqueKind {
    Min,
    Max,
    InvMin,
    InvMax,
}

impl CliqueKind {
    pub const ALL: [CliqueKind; 4] = [CliqueKind::Min, CliqueKind::Max, CliqueKind::InvMin, CliqueKind::InvMax];

    /// Label of `v_i v_j` for one-based `i < j`.
    fn label(self, n: i64, i: i64, j: i64) -> i64 {
        match self {
            CliqueKind::Min => n * i + j,
            CliqueKind::Max => n * j + i,
            CliqueKind::InvMin => n * i - j,
            CliqueKind::InvMax => n * j - i,
        }
    }
}

impl fmt::Display for CliqueKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CliqueKind::Min => "min",
            CliqueKind::Max => "max",
            CliqueKind::InvMin => "inv_min",
            CliqueKind::InvMax => "inv_max",
        })
    }
}

impl FromStr for CliqueKind {
    type Err = EogError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "min" => Ok(CliqueKind::Min),
            "max" => Ok(CliqueKind::Max),
            "inv_min" | "inv-min" => Ok(CliqueKind::InvMin),
            "inv_max" | "inv-max" => Ok(CliqueKind::InvMax),
            other => Err(EogError::Parse(format!("unknown clique kind `{other}`"))),
        }
    }
}

/// `K_n` on vertices `0..n` (vertex `v` is `v_{v+1}`) ordered by `kind`.
pub fn canonical_clique(n: usize, kind: CliqueKind) -> EdgeOrderedGraph {
    let mut labelled: Vec<(i64, (usize, usize))> = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            labelled.push((kind.label(n as i64, i as i64 + 1, j as i64 + 1), (i, j)));
        }
    }
    labelled.sort_unstable();
    EdgeOrderedGraph::new(n, labelled.into_iter().map(|(_, e)| e)).expect("clique edges are valid")
}

/// `K_{n,n}` with left vertices `0..n`, right vertices `n..2n`, and `u_i v_j`
/// ordered lexicographically by `(i, j)`.
pub fn knn_can(n: usize) -> SidedPattern {
    let edges = (0..n).flat_map(|i| (0..n).map(move |j| (i, n + j)));
    let graph = EdgeOrderedGraph::new(2 * n, edges).expect("bipartite edges are valid");
    let sides = (0..2 * n).map(|v| if v < n { Side::Left } else { Side::Right }).collect();
    SidedPattern::new(graph, sides, None).expect("sides are consistent")
}

/// How two distinct parts relate in a canonical edge-order.
///
/// For interleaving parts sharing a class, let `a` and `b` be the indices in
/// the shared class of an edge `e` of the lower-numbered part and an edge `f`
/// of the other part; `e` comes before `f` exactly when `a < b`, `a <= b`,
/// `a > b` or `a >= b`, respectively.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PairRelation {
    FirstPrecedes,
    SecondPrecedes,
    InterleaveLess,
    InterleaveLessEq,
    InterleaveGreater,
    InterleaveGreaterEq,
}

impl PairRelation {
    const ALL: [PairRelation; 6] = [
        PairRelation::FirstPrecedes,
        PairRelation::SecondPrecedes,
        PairRelation::InterleaveLess,
        PairRelation::InterleaveLessEq,
        PairRelation::InterleaveGreater,
        PairRelation::InterleaveGreaterEq,
    ];

    pub fn is_interleave(self) -> bool {
        !matches!(self, PairRelation::FirstPrecedes | PairRelation::SecondPrecedes)
    }

    fn code(self) -> &'static str {
        match self {
            PairRelation::FirstPrecedes => "F",
            PairRelation::SecondPrecedes => "S",
            PairRelation::InterleaveLess => "I<",
            PairRelation::InterleaveLessEq => "I<=",
            PairRelation::InterleaveGreater => "I>",
            PairRelation::InterleaveGreaterEq => "I>=",
        }
    }
}

/// One canonical edge-order of `K_{k x n}` described symbolically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CanonicalSpec {
    pub k: usize,
    pub n: usize,
    /// Labeling `1..=8` of each part.
    pub part_labeling: Vec<u8>,
    /// Relation of parts `p < q`, listed in lexicographic order of `(p, q)`.
    pub pair_relation: Vec<PairRelation>,
}

impl CanonicalSpec {
    pub fn has_interleave(&self) -> bool {
        self.pair_relation.iter().any(|r| r.is_interleave())
    }

    /// Relation between parts `p < q`.
    pub fn relation(&self, p: usize, q: usize) -> PairRelation {
        let parts = self.k * (self.k - 1) / 2;
        self.pair_relation[pair_index(parts, p, q)]
    }

    /// The same choices on classes of size `n`.
    pub fn with_class_size(&self, n: usize) -> CanonicalSpec {
        CanonicalSpec { n, ..self.clone() }
    }

    /// Realizes the spec, or `None` if the induced relation is not a linear order.
    pub fn realize(&self) -> Option<EdgeOrderedGraph> {
        if self.k < 2 || self.n == 0 {
            return None;
        }
        let parts = class_pairs(self.k);
        if self.part_labeling.len() != parts.len()
            || self.pair_relation.len() != parts.len() * (parts.len() - 1) / 2
            || self.part_labeling.iter().any(|&l| !(1..=8).contains(&l))
        {
            return None;
        }
        let ctx = Ctx { parts: &parts, spec: self };
        for p in 0..parts.len() {
            for q in p + 1..parts.len() {
                if self.relation(p, q).is_interleave() && shared_class(parts[p], parts[q]).is_none() {
                    return None;
                }
            }
        }
        let edges: Vec<Edge> = (0..parts.len())
            .flat_map(|p| (0..self.n).flat_map(move |a| (0..self.n).map(move |b| Edge { part: p, a, b })))
            .collect();
        let order = linear_positions(&ctx, &edges)?;
        let mut slots = vec![(0, 0); edges.len()];
        for (e, pos) in edges.iter().zip(order) {
            let (i1, i2) = parts[e.part];
            slots[pos] = (i1 * self.n + e.a, i2 * self.n + e.b);
        }
        Some(EdgeOrderedGraph::new(self.k * self.n, slots).expect("multipartite edges are valid"))
    }
}

impl fmt::Display for CanonicalSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labs: Vec<String> = self.part_labeling.iter().map(u8::to_string).collect();
        let rels: Vec<&str> = self.pair_relation.iter().map(|r| r.code()).collect();
        write!(f, "k={} n={} L={} R={}", self.k, self.n, labs.join(","), rels.join(","))
    }
}

impl FromStr for CanonicalSpec {
    type Err = EogError;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || EogError::Parse(format!("malformed canonical spec `{s}`"));
        let mut k = None;
        let mut n = None;
        let mut labs = None;
        let mut rels = None;
        for tok in s.split_whitespace() {
            let (key, value) = tok.split_once('=').ok_or_else(bad)?;
            match key {
                "k" => k = Some(value.parse().map_err(|_| bad())?),
                "n" => n = Some(value.parse().map_err(|_| bad())?),
                "L" => {
                    labs = Some(
                        value
                            .split(',')
                            .filter(|x| !x.is_empty())
                            .map(|x| x.parse::<u8>().map_err(|_| bad()))
                            .collect::<Result<Vec<_>>>()?,
                    )
                }
                "R" => {
                    rels = Some(
                        value
                            .split(',')
                            .filter(|x| !x.is_empty())
                            .map(|x| PairRelation::ALL.into_iter().find(|r| r.code() == x).ok_or_else(bad))
                            .collect::<Result<Vec<_>>>()?,
                    )
                }
                _ => return Err(bad()),
            }
        }
        Ok(CanonicalSpec {
            k: k.ok_or_else(bad)?,
            n: n.ok_or_else(bad)?,
            part_labeling: labs.ok_or_else(bad)?,
            pair_relation: rels.unwrap_or_default(),
        })
    }
}

/// Class pairs `(i1, i2)`, `i1 < i2`, in lexicographic order.
fn class_pairs(k: usize) -> Vec<(usize, usize)> {
    (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).collect()
}

fn pair_index(parts: usize, p: usize, q: usize) -> usize {
    debug_assert!(p < q && q < parts);
    p * parts - p * (p + 1) / 2 + (q - p - 1)
}

fn shared_class(x: (usize, usize), y: (usize, usize)) -> Option<usize> {
    [x.0, x.1].into_iter().find(|c| *c == y.0 || *c == y.1)
}

/// An edge of part `part` joining index `a` of the lower class to index `b`
/// of the higher class.
#[derive(Clone, Copy)]
struct Edge {
    part: usize,
    a: usize,
    b: usize,
}

impl Edge {
    fn index_in(&self, parts: &[(usize, usize)], class: usize) -> usize {
        if parts[self.part].0 == class {
            self.a
        } else {
            self.b
        }
    }
}

fn labeling_key(l: u8, a: usize, b: usize) -> (i64, i64) {
    let (a, b) = (a as i64, b as i64);
    match l {
        1 => (a, b),
        2 => (a, -b),
        3 => (-a, b),
        4 => (-a, -b),
        5 => (b, a),
        6 => (b, -a),
        7 => (-b, a),
        _ => (-b, -a),
    }
}

/// Spec data reachable by the comparator; `spec.pair_relation` may be only
/// partially meaningful during enumeration, but only assigned pairs are read.
struct Ctx<'a> {
    parts: &'a [(usize, usize)],
    spec: &'a CanonicalSpec,
}

impl Ctx<'_> {
    fn less(&self, e: &Edge, f: &Edge) -> bool {
        if e.part == f.part {
            let l = self.spec.part_labeling[e.part];
            return labeling_key(l, e.a, e.b) < labeling_key(l, f.a, f.b);
        }
        if e.part > f.part {
            return !self.less(f, e);
        }
        let rel = self.spec.relation(e.part, f.part);
        let shared = || shared_class(self.parts[e.part], self.parts[f.part]).expect("interleave needs a shared class");
        match rel {
            PairRelation::FirstPrecedes => true,
            PairRelation::SecondPrecedes => false,
            _ => {
                let c = shared();
                let (x, y) = (e.index_in(self.parts, c), f.index_in(self.parts, c));
                match rel {
                    PairRelation::InterleaveLess => x < y,
                    PairRelation::InterleaveLessEq => x <= y,
                    PairRelation::InterleaveGreater => x > y,
                    _ => x >= y,
                }
            }
        }
    }
}

/// Position of each edge if the comparator is a strict linear order on
/// `edges`. A tournament is transitive exactly when its scores are distinct.
fn linear_positions(ctx: &Ctx<'_>, edges: &[Edge]) -> Option<Vec<usize>> {
    let mut seen = vec![false; edges.len()];
    let mut out = Vec::with_capacity(edges.len());
    for e in edges {
        let score = edges.iter().filter(|f| ctx.less(f, e)).count();
        if seen[score] {
            return None;
        }
        seen[score] = true;
        out.push(score);
    }
    Some(out)
}

/// DFS node limit for [`enumerate_canonical`].
pub const DEFAULT_NODE_LIMIT: u64 = 20_000_000;

/// Result of [`enumerate_canonical`].
#[derive(Clone, Debug)]
pub struct CanonicalEnumeration {
    pub orders: Vec<(CanonicalSpec, EdgeOrderedGraph)>,
    /// Set for classes of size 2, where the set of valid choices may differ
    /// from the one for larger classes.
    pub small_class_warning: bool,
}

/// Every canonical edge-order of `K_{k x n}`, in enumeration order.
///
/// Choices are made part by part: first the labeling `1..=8` of part `p`,
/// then its relation to each earlier part in the order of `PairRelation`'s
/// variants. For `n >= 3` the valid choices do not depend on `n`; they are
/// found on classes of size 3 and each is re-checked at size `n`.
pub fn enumerate_canonical(k: usize, n: usize) -> Result<CanonicalEnumeration> {
    enumerate_canonical_limited(k, n, DEFAULT_NODE_LIMIT)
}

/// [`enumerate_canonical`] with an explicit DFS node limit.
pub fn enumerate_canonical_limited(k: usize, n: usize, node_limit: u64) -> Result<CanonicalEnumeration> {
    let mut orders = Vec::new();
    let small = for_each_canonical(k, n, node_limit, |spec, g| {
        orders.push((spec.clone(), g.clone()));
        ControlFlow::Continue(())
    })?;
    Ok(CanonicalEnumeration { orders, small_class_warning: small })
}

fn check_dims(k: usize, n: usize) -> Result<()> {
    if k < 2 {
        return Err(EogError::InvalidParameter(format!("need at least two classes, got k={k}")));
    }
    if n < 2 {
        return Err(EogError::InvalidParameter(format!("class size must be at least 2, got n={n}")));
    }
    if n == 2 && k >= 4 {
        return Err(EogError::InvalidParameter(
            "classes of size 2 are not supported for k >= 4".to_string(),
        ));
    }
    Ok(())
}

/// Valid spec shapes (class size `min(n, 3)`), in enumeration order.
pub fn canonical_specs(k: usize, n: usize, node_limit: u64) -> Result<Vec<CanonicalSpec>> {
    check_dims(k, n)?;
    let shape_n = n.min(3);
    let parts = class_pairs(k);
    let np = parts.len();
    let mut spec = CanonicalSpec {
        k,
        n: shape_n,
        part_labeling: vec![1; np],
        pair_relation: vec![PairRelation::FirstPrecedes; np * (np - 1) / 2],
    };
    let part_edges: Vec<Vec<Edge>> = (0..np)
        .map(|p| {
            (0..shape_n)
                .flat_map(|a| (0..shape_n).map(move |b| Edge { part: p, a, b }))
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut nodes = 0u64;
    let mut e = Enumerator { parts: &parts, part_edges: &part_edges, nodes: &mut nodes, node_limit, out: &mut out };
    e.place_part(&mut spec, 0)?;
    Ok(out)
}

struct Enumerator<'a> {
    parts: &'a [(usize, usize)],
    part_edges: &'a [Vec<Edge>],
    nodes: &'a mut u64,
    node_limit: u64,
    out: &'a mut Vec<CanonicalSpec>,
}

impl Enumerator<'_> {
    fn tick(&mut self) -> Result<()> {
        *self.nodes += 1;
        if *self.nodes > self.node_limit {
            return Err(EogError::BudgetExceeded { nodes: *self.nodes });
        }
        Ok(())
    }

    fn consistent(&self, spec: &CanonicalSpec, ps: &[usize]) -> bool {
        let edges: Vec<Edge> = ps.iter().flat_map(|&p| self.part_edges[p].iter().copied()).collect();
        linear_positions(&Ctx { parts: self.parts, spec }, &edges).is_some()
    }

    fn place_part(&mut self, spec: &mut CanonicalSpec, p: usize) -> Result<()> {
        if p == self.parts.len() {
            self.out.push(spec.clone());
            return Ok(());
        }
        for l in 1..=8u8 {
            self.tick()?;
            spec.part_labeling[p] = l;
            self.place_relation(spec, p, 0)?;
        }
        Ok(())
    }

    /// Chooses the relation between earlier part `q` and the new part `p`.
    fn place_relation(&mut self, spec: &mut CanonicalSpec, p: usize, q: usize) -> Result<()> {
        if q == p {
            return self.place_part(spec, p + 1);
        }
        let np = self.parts.len();
        let shares = shared_class(self.parts[q], self.parts[p]).is_some();
        for rel in PairRelation::ALL {
            if rel.is_interleave() && !shares {
                continue;
            }
            self.tick()?;
            spec.pair_relation[pair_index(np, q, p)] = rel;
            if !self.consistent(spec, &[q, p]) {
                continue;
            }
            if (0..q).any(|r| !self.consistent(spec, &[r, q, p])) {
                continue;
            }
            self.place_relation(spec, p, q + 1)?;
        }
        Ok(())
    }
}

/// Visits every canonical edge-order of `K_{k x n}` in enumeration order until
/// `f` breaks. Returns the small-class warning flag.
pub fn for_each_canonical<F>(k: usize, n: usize, node_limit: u64, mut f: F) -> Result<bool>
where
    F: FnMut(&CanonicalSpec, &EdgeOrderedGraph) -> ControlFlow<()>,
{
    let specs = canonical_specs(k, n, node_limit)?;
    for shape in specs {
        let spec = shape.with_class_size(n);
        if let Some(g) = spec.realize() {
            if f(&spec, &g).is_break() {
                break;
            }
        }
    }
    Ok(n == 2)
}
