//! Forbidden 0-1 submatrices and the matrix-to-graph functor.
//!
//! `.mat` text format: a `rows cols` line followed by `rows` lines of `0`/`1`
//! characters. Lines starting with `#` are ignored.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{EogError, Result};
use crate::graph::{EdgeOrderedGraph, Side, SidedPattern};
use crate::key::canonical_key;

/// A 0-1 matrix given by the positions of its 1-entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ZeroOnePattern {
    rows: usize,
    cols: usize,
    ones: BTreeSet<(usize, usize)>,
}

impl ZeroOnePattern {
    pub fn new(rows: usize, cols: usize, ones: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (r, c) in ones {
            if r >= rows || c >= cols {
                return Err(EogError::InvalidParameter(format!("entry ({r}, {c}) outside a {rows}x{cols} matrix")));
            }
            if !set.insert((r, c)) {
                return Err(EogError::InvalidParameter(format!("entry ({r}, {c}) listed twice")));
            }
        }
        Ok(ZeroOnePattern { rows, cols, ones: set })
    }

    /// Builds a matrix from rows of `0`/`1` values.
    pub fn from_rows(rows: &[Vec<u8>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(EogError::Parse("ragged matrix rows".into()));
        }
        let mut ones = Vec::new();
        for (i, row) in rows.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                match x {
                    0 => {}
                    1 => ones.push((i, j)),
                    _ => return Err(EogError::Parse(format!("entry {x} is not 0 or 1"))),
                }
            }
        }
        Self::new(rows.len(), cols, ones)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn ones(&self) -> &BTreeSet<(usize, usize)> {
        &self.ones
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.ones.contains(&(r, c))
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        (0..self.rows).map(|r| (0..self.cols).map(|c| u8::from(self.get(r, c))).collect()).collect()
    }
}

impl fmt::Display for ZeroOnePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&serialize_mat(self))
    }
}

/// Parses `.mat` text.
pub fn parse_mat(text: &str) -> Result<ZeroOnePattern> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines.next().ok_or_else(|| EogError::Parse("missing `rows cols` header".into()))?;
    let dims: Vec<usize> = header
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| EogError::Parse(format!("bad header `{header}`"))))
        .collect::<Result<_>>()?;
    let [rows, cols] = dims[..] else {
        return Err(EogError::Parse(format!("bad header `{header}`")));
    };
    let mut data = Vec::new();
    for line in lines {
        let row: Vec<u8> = line
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                _ => Err(EogError::Parse(format!("bad matrix row `{line}`"))),
            })
            .collect::<Result<_>>()?;
        if row.len() != cols {
            return Err(EogError::Parse(format!("row `{line}` does not have {cols} entries")));
        }
        data.push(row);
    }
    if data.len() != rows {
        return Err(EogError::Parse(format!("expected {rows} rows, found {}", data.len())));
    }
    let ones = data
        .iter()
        .enumerate()
        .flat_map(|(i, r)| r.iter().enumerate().filter(|(_, &x)| x == 1).map(move |(j, _)| (i, j)));
    ZeroOnePattern::new(rows, cols, ones)
}

/// Writes `.mat` text.
pub fn serialize_mat(m: &ZeroOnePattern) -> String {
    let mut out = format!("{} {}\n", m.rows, m.cols);
    for row in m.to_rows() {
        out.extend(row.iter().map(|&x| if x == 1 { '1' } else { '0' }));
        out.push('\n');
    }
    out
}

/// Whether deleting rows and columns of `m` (keeping their order) and turning
/// some 1-entries into 0 can produce `p`.
pub fn contains_pattern(m: &ZeroOnePattern, p: &ZeroOnePattern) -> bool {
    if p.rows > m.rows || p.cols > m.cols {
        return false;
    }
    let mut chosen = Vec::with_capacity(p.rows);
    choose_rows(m, p, 0, &mut chosen)
}

fn choose_rows(m: &ZeroOnePattern, p: &ZeroOnePattern, from: usize, chosen: &mut Vec<usize>) -> bool {
    if !columns_fit(m, p, chosen) {
        return false;
    }
    if chosen.len() == p.rows {
        return true;
    }
    let need = p.rows - chosen.len();
    for r in from..=m.rows - need {
        chosen.push(r);
        if choose_rows(m, p, r + 1, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Greedy leftmost column matching for the first `rows.len()` pattern rows.
fn columns_fit(m: &ZeroOnePattern, p: &ZeroOnePattern, rows: &[usize]) -> bool {
    let mut col = 0;
    for pc in 0..p.cols {
        loop {
            if col >= m.cols {
                return false;
            }
            let ok = rows.iter().enumerate().all(|(i, &r)| !p.get(i, pc) || m.get(r, col));
            col += 1;
            if ok {
                break;
            }
        }
    }
    true
}

/// `G(M)`: a left vertex per row (`0..rows`), a right vertex per column
/// (`rows..rows+cols`), an edge per 1-entry, ordered by column and within a
/// column by row.
pub fn graph_from_matrix_rowcol(m: &ZeroOnePattern) -> SidedPattern {
    let mut cells: Vec<(usize, usize)> = m.ones.iter().copied().collect();
    cells.sort_by_key(|&(r, c)| (c, r));
    let edges = cells.into_iter().map(|(r, c)| (r, m.rows + c));
    let graph = EdgeOrderedGraph::new(m.rows + m.cols, edges).expect("matrix entries give a simple graph");
    let sides = (0..m.rows + m.cols).map(|v| if v < m.rows { Side::Left } else { Side::Right }).collect();
    SidedPattern::new(graph, sides, None).expect("rows and columns form a bipartition")
}

/// `G(M)` ordered by column with ties inside a column broken by row; this
/// coincides with [`graph_from_matrix_rowcol`].
pub fn graph_from_matrix_col(m: &ZeroOnePattern) -> SidedPattern {
    graph_from_matrix_rowcol(m)
}

/// Largest vertex count accepted by [`patterns_for`].
pub const MAX_PATTERN_VERTICES: usize = 12;

/// Every matrix `P` without empty rows or columns such that `G(P)` is
/// isomorphic to `h` (isolated vertices of `h` ignored), sorted. Empty when
/// `h` is bipartite but no matrix realizes its order.
pub fn patterns_for(h: &EdgeOrderedGraph) -> Result<Vec<ZeroOnePattern>> {
    let core = h.without_isolated();
    if !core.underlying().is_bipartite() {
        return Err(EogError::NotBipartite);
    }
    let s = core.vertex_count();
    if s > MAX_PATTERN_VERTICES {
        return Err(EogError::InvalidParameter(format!("{s} vertices is too many for patterns_for")));
    }
    let m = core.edge_count();
    let target = canonical_key(&core);
    let mut out = Vec::new();
    for rows in 1..s {
        let cols = s - rows;
        let cells: Vec<(usize, usize)> = (0..rows).flat_map(|r| (0..cols).map(move |c| (r, c))).collect();
        if cells.len() < m {
            continue;
        }
        let mut pick = Vec::with_capacity(m);
        subsets(&cells, m, 0, &mut pick, &mut |ones| {
            let full_rows = (0..rows).all(|r| ones.iter().any(|&(x, _)| x == r));
            let full_cols = (0..cols).all(|c| ones.iter().any(|&(_, y)| y == c));
            if full_rows && full_cols {
                let p = ZeroOnePattern::new(rows, cols, ones.iter().copied()).expect("cells are in range");
                if canonical_key(graph_from_matrix_rowcol(&p).graph()) == target {
                    out.push(p);
                }
            }
        });
    }
    out.sort();
    Ok(out)
}

fn subsets<T: Copy>(items: &[T], k: usize, from: usize, pick: &mut Vec<T>, f: &mut impl FnMut(&[T])) {
    if pick.len() == k {
        f(pick);
        return;
    }
    for i in from..items.len() {
        if items.len() - i < k - pick.len() {
            break;
        }
        pick.push(items[i]);
        subsets(items, k, i + 1, pick, f);
        pick.pop();
    }
}
