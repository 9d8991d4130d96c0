//! Words up to renaming of letters, and the encodings linking edge-ordered
//! star forests to Davenport–Schinzel sequences.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{EogError, Result};
use crate::graph::EdgeOrderedGraph;

/// A finite sequence of abstract letters.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Word(pub Vec<u32>);

impl Word {
    pub fn new(letters: Vec<u32>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of distinct letters.
    pub fn distinct_letters(&self) -> usize {
        let mut seen: Vec<u32> = self.0.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    /// Renames letters to `0, 1, ...` in order of first occurrence.
    pub fn normalized(&self) -> Word {
        let mut names: Vec<(u32, u32)> = Vec::new();
        let out = self
            .0
            .iter()
            .map(|&a| match names.iter().find(|(x, _)| *x == a) {
                Some(&(_, y)) => y,
                None => {
                    let y = names.len() as u32;
                    names.push((a, y));
                    y
                }
            })
            .collect();
        Word(out)
    }

    /// Each letter repeated `times` times in place.
    pub fn stretched(&self, times: usize) -> Word {
        Word(self.0.iter().flat_map(|&a| std::iter::repeat_n(a, times)).collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&a| a < 26) {
            let s: String = self.0.iter().map(|&a| (b'a' + a as u8) as char).collect();
            f.write_str(&s)
        } else {
            let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
            f.write_str(&parts.join(" "))
        }
    }
}

impl FromStr for Word {
    type Err = EogError;

    /// Accepts lowercase letters (`abab`) or whitespace-separated integers.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.contains(char::is_whitespace) || s.chars().all(|c| c.is_ascii_digit()) && !s.is_empty() {
            s.split_whitespace()
                .map(|t| t.parse::<u32>().map_err(|_| EogError::Parse(format!("bad letter `{t}`"))))
                .collect::<Result<Vec<_>>>()
                .map(Word)
        } else if s.chars().all(|c| c.is_ascii_lowercase()) {
            Ok(Word(s.bytes().map(|b| (b - b'a') as u32).collect()))
        } else {
            Err(EogError::Parse(format!("malformed word `{s}`")))
        }
    }
}

/// Whether `u` and `v` agree up to a bijective renaming of letters.
pub fn equivalent(u: &Word, v: &Word) -> bool {
    u.len() == v.len() && u.normalized() == v.normalized()
}

/// Whether some subword of `u` is equivalent to `f`.
pub fn contains_word(u: &Word, f: &Word) -> Result<bool> {
    if f.is_empty() {
        return Err(EogError::InvalidParameter("the forbidden word must not be empty".into()));
    }
    let f = f.normalized();
    let mut image: Vec<Option<u32>> = vec![None; f.distinct_letters()];
    Ok(match_from(&u.0, &f.0, 0, 0, &mut image))
}

/// Matches `f[i..]` inside `u[pos..]`. For a fixed letter assignment the
/// earliest occurrence is always the best choice, so only new letters branch.
fn match_from(u: &[u32], f: &[u32], i: usize, pos: usize, image: &mut Vec<Option<u32>>) -> bool {
    if i == f.len() {
        return true;
    }
    if u.len() - pos < f.len() - i {
        return false;
    }
    let letter = f[i] as usize;
    match image[letter] {
        Some(target) => match u[pos..].iter().position(|&a| a == target) {
            Some(off) => match_from(u, f, i + 1, pos + off + 1, image),
            None => false,
        },
        None => {
            let mut tried: Vec<u32> = Vec::new();
            for j in pos..u.len() {
                let a = u[j];
                if tried.contains(&a) || image.contains(&Some(a)) {
                    continue;
                }
                tried.push(a);
                image[letter] = Some(a);
                if match_from(u, f, i + 1, j + 1, image) {
                    return true;
                }
                image[letter] = None;
            }
            false
        }
    }
}

/// Whether every `k` consecutive letters of `u` are distinct (shorter words:
/// all letters distinct).
pub fn is_k_regular(u: &Word, k: usize) -> bool {
    let w = &u.0;
    (0..w.len()).all(|i| {
        let start = (i + 1).saturating_sub(k);
        !w[start..i].contains(&w[i])
    })
}

/// Left-to-right greedy: append a letter whenever the result stays
/// `k`-regular.
pub fn greedy_k_regular(u: &Word, k: usize) -> Word {
    let mut out: Vec<u32> = Vec::new();
    for &a in &u.0 {
        let start = out.len().saturating_sub(k.saturating_sub(1));
        if !out[start..].contains(&a) {
            out.push(a);
        }
    }
    Word(out)
}

/// Whether `sub` is a subsequence of `u`.
pub fn is_subsequence(sub: &Word, u: &Word) -> bool {
    let mut it = u.0.iter();
    sub.0.iter().all(|a| it.any(|b| b == a))
}

/// `w(F)`: the component letter of each edge of the star forest `f`, in edge
/// order. Components are lettered by first appearance.
pub fn w_of(f: &EdgeOrderedGraph) -> Result<Word> {
    if !f.is_star_forest() {
        return Err(EogError::NotStarForest);
    }
    let comps = f.underlying().components();
    let mut comp_of = vec![0usize; f.vertex_count()];
    for (c, members) in comps.iter().enumerate() {
        for &v in members {
            comp_of[v] = c;
        }
    }
    let raw = Word(f.edges().iter().map(|&(a, _)| comp_of[a] as u32).collect());
    Ok(raw.normalized())
}

/// `w'(F)`: `w(F)` with each letter repeated `2m` times.
pub fn w_prime_of(f: &EdgeOrderedGraph) -> Result<Word> {
    Ok(w_of(f)?.stretched(2 * f.edge_count()))
}

/// `u(G)`: the endpoints of each edge in edge order, smaller vertex first.
pub fn u_of(g: &EdgeOrderedGraph) -> Word {
    u_of_oriented(g, |_| false)
}

/// `u(G)` where `flip(t)` puts the larger endpoint of the edge at position
/// `t` first.
pub fn u_of_oriented(g: &EdgeOrderedGraph, flip: impl Fn(usize) -> bool) -> Word {
    let mut out = Vec::with_capacity(2 * g.edge_count());
    for (t, &(a, b)) in g.edges().iter().enumerate() {
        let (x, y) = if flip(t) { (b, a) } else { (a, b) };
        out.push(x as u32);
        out.push(y as u32);
    }
    Word(out)
}

/// Outcome of [`ds_bruteforce`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum DsResult {
    Exact(usize),
    /// The length guard was reached.
    AtLeast(usize),
}

/// Longest `||f||`-regular word over at most `n` letters avoiding `f`, by
/// exhaustive extension with letters introduced in increasing order.
pub fn ds_bruteforce(n: usize, f: &Word, max_len: usize) -> Result<DsResult> {
    if f.is_empty() {
        return Err(EogError::InvalidParameter("the forbidden word must not be empty".into()));
    }
    if n > 6 {
        return Err(EogError::InvalidParameter(format!("ds_bruteforce is limited to n <= 6, got {n}")));
    }
    let k = f.distinct_letters();
    let mut word = Vec::new();
    let mut best = 0;
    let capped = ds_extend(n, f, k, max_len, &mut word, 0, &mut best)?;
    Ok(if capped { DsResult::AtLeast(max_len) } else { DsResult::Exact(best) })
}

fn ds_extend(
    n: usize,
    f: &Word,
    k: usize,
    max_len: usize,
    word: &mut Vec<u32>,
    used: u32,
    best: &mut usize,
) -> Result<bool> {
    *best = (*best).max(word.len());
    if word.len() >= max_len {
        return Ok(true);
    }
    let limit = (used as usize + 1).min(n) as u32;
    for a in 0..limit {
        let start = word.len().saturating_sub(k.saturating_sub(1));
        if word[start..].contains(&a) {
            continue;
        }
        word.push(a);
        let ok = !contains_word(&Word(word.clone()), f)?;
        if ok && ds_extend(n, f, k, max_len, word, used.max(a + 1), best)? {
            word.pop();
            return Ok(true);
        }
        word.pop();
    }
    Ok(false)
}
