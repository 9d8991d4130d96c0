//! Canonical forms of edge-ordered graphs.
//!
//! Vertices are relabelled in order of first appearance along the edge order.
//! The only freedom left is inside edges whose two endpoints both appear for
//! the first time; such a pair stays unresolved until one of its vertices is
//! touched again, and the search branches there. The key is the
//! lexicographically least label sequence over all branches.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::EdgeOrderedGraph;

/// Totally ordered isomorphism invariant: equal keys iff isomorphic graphs.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CanonicalKey(Vec<u32>);

impl CanonicalKey {
    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// Rebuilds the canonical representative.
    pub fn to_graph(&self) -> EdgeOrderedGraph {
        let n = self.0[0] as usize;
        let edges = self.0[2..].chunks(2).map(|c| (c[0] as usize, c[1] as usize));
        EdgeOrderedGraph::new(n, edges).expect("keys encode valid graphs")
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&parts.join("."))
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Label {
    Unseen,
    Fixed(u32),
    /// One of `{k, k + 1}`, shared with `partner`.
    Pending { k: u32, partner: usize },
}

struct KeySearch<'a> {
    edges: &'a [(usize, usize)],
    best: Option<Vec<u32>>,
    seq: Vec<u32>,
}

impl KeySearch<'_> {
    /// `tight` holds when the current prefix equals the prefix of `best`.
    fn run(&mut self, t: usize, labels: &mut Vec<Label>, next: u32, tight: bool) {
        if t == self.edges.len() {
            if !tight {
                self.best = Some(self.seq.clone());
            }
            return;
        }
        let (a, b) = self.edges[t];
        for v in [a, b] {
            if let Label::Pending { k, partner } = labels[v] {
                for (i, (x, y)) in [(k, k + 1), (k + 1, k)].into_iter().enumerate() {
                    labels[v] = Label::Fixed(x);
                    labels[partner] = Label::Fixed(y);
                    // Any leaf below this node shares its prefix, so after the
                    // first branch the prefix matches `best`.
                    let branch_tight = if i == 0 { tight } else { self.best.is_some() };
                    self.run(t, labels, next, branch_tight);
                }
                labels[v] = Label::Pending { k, partner };
                labels[partner] = Label::Pending { k, partner: v };
                return;
            }
        }
        let saved = (labels[a], labels[b]);
        let mut next = next;
        let mut fix = |l: &mut Label| match *l {
            Label::Fixed(x) => x,
            _ => {
                *l = Label::Fixed(next);
                next += 1;
                next - 1
            }
        };
        let (la, lb) = if saved.0 == Label::Unseen && saved.1 == Label::Unseen {
            labels[a] = Label::Pending { k: next, partner: b };
            labels[b] = Label::Pending { k: next, partner: a };
            next += 2;
            (next - 2, next - 1)
        } else {
            let la = fix(&mut labels[a]);
            let lb = fix(&mut labels[b]);
            (la, lb)
        };
        let pair = (la.min(lb), la.max(lb));
        let idx = self.seq.len();
        let mut still_tight = tight;
        if tight {
            let best = self.best.as_ref().expect("tight implies a best sequence");
            match pair.cmp(&(best[idx], best[idx + 1])) {
                std::cmp::Ordering::Greater => {
                    labels[a] = saved.0;
                    labels[b] = saved.1;
                    return;
                }
                std::cmp::Ordering::Less => still_tight = false,
                std::cmp::Ordering::Equal => {}
            }
        }
        self.seq.push(pair.0);
        self.seq.push(pair.1);
        self.run(t + 1, labels, next, still_tight);
        self.seq.truncate(idx);
        labels[a] = saved.0;
        labels[b] = saved.1;
    }
}

/// Canonical key of `g`.
pub fn canonical_key(g: &EdgeOrderedGraph) -> CanonicalKey {
    let mut search = KeySearch { edges: g.edges(), best: None, seq: Vec::with_capacity(2 * g.edge_count()) };
    let mut labels = vec![Label::Unseen; g.vertex_count()];
    search.run(0, &mut labels, 0, false);
    let mut out = vec![g.vertex_count() as u32, g.edge_count() as u32];
    out.extend(search.best.unwrap_or_default());
    CanonicalKey(out)
}

/// Whether an edge-order-preserving isomorphism exists.
pub fn are_isomorphic(g: &EdgeOrderedGraph, h: &EdgeOrderedGraph) -> bool {
    g.vertex_count() == h.vertex_count()
        && g.edge_count() == h.edge_count()
        && canonical_key(g) == canonical_key(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle_pattern, path_pattern};

    #[test]
    fn mirror_paths_share_a_key() {
        let a = path_pattern(&[1, 3, 2]).unwrap();
        let b = path_pattern(&[2, 3, 1]).unwrap();
        assert_eq!(canonical_key(&a), canonical_key(&b));
        assert!(are_isomorphic(&a, &b));
    }

    #[test]
    fn distinguishes_orders() {
        let a = path_pattern(&[1, 2, 3]).unwrap();
        let b = path_pattern(&[1, 3, 2]).unwrap();
        assert_ne!(canonical_key(&a), canonical_key(&b));
    }

    #[test]
    fn relabel_invariance() {
        let c = cycle_pattern(&[1, 2, 4, 3]).unwrap().with_isolated(1);
        let perm = [3, 0, 4, 1, 2];
        assert_eq!(canonical_key(&c), canonical_key(&c.relabel(&perm)));
    }

    #[test]
    fn key_round_trips_to_an_isomorphic_graph() {
        let c = cycle_pattern(&[2, 4, 1, 3]).unwrap();
        let k = canonical_key(&c);
        assert_eq!(canonical_key(&k.to_graph()), k);
    }

    #[test]
    fn isolated_vertices_count() {
        let a = path_pattern(&[1]).unwrap();
        assert!(!are_isomorphic(&a, &a.with_isolated(1)));
    }
}
