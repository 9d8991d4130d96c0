//! Short textual names for patterns.
//!
//! | form | meaning |
//! |---|---|
//! | `path:1342` | path whose i-th edge has the i-th label |
//! | `cycle:1243` | cycle, labels listed along the cycle |
//! | `file:PATH` | an `.eog` file |
//! | `d4`, `d:N` | the graph `D_N` |
//! | `k9` | the fixed labeling of `K_9` |
//! | `knncan:N` | the canonical edge-order of `K_{N,N}` |
//! | `clique:KIND:N` | a canonical edge-order of `K_N` (`min`, `max`, `inv_min`, `inv_max`) |
//!
//! Labels may be separated by commas (`path:1,10,2,...`), which is required
//! once a label has two digits.

use crate::canonical::{canonical_clique, knn_can, CliqueKind};
use crate::constructions::{d_graph, k9_labeling};
use crate::error::{EogError, Result};
use crate::format::parse_eog;
use crate::graph::{cycle_pattern, path_pattern, EdgeOrderedGraph};

fn parse_labels(text: &str) -> Result<Vec<usize>> {
    let bad = || EogError::Parse(format!("bad label list `{text}`"));
    if text.contains(',') {
        text.split(',').map(|t| t.trim().parse().map_err(|_| bad())).collect()
    } else {
        text.chars().map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad)).collect()
    }
}

fn parse_size(text: &str) -> Result<usize> {
    text.parse().map_err(|_| EogError::Parse(format!("bad size `{text}`")))
}

/// Resolves a pattern name.
pub fn parse_pattern(spec: &str) -> Result<EdgeOrderedGraph> {
    let spec = spec.trim();
    let (head, rest) = spec.split_once(':').unwrap_or((spec, ""));
    match head {
        "path" => path_pattern(&parse_labels(rest)?),
        "cycle" => cycle_pattern(&parse_labels(rest)?),
        "file" => {
            let text = std::fs::read_to_string(rest).map_err(|e| EogError::Parse(format!("{rest}: {e}")))?;
            parse_eog(&text)
        }
        "d" => d_graph(parse_size(rest)?),
        "knncan" => Ok(knn_can(parse_size(rest)?).graph().clone()),
        "k9" if rest.is_empty() => Ok(k9_labeling()),
        "clique" => {
            let (kind, n) = rest
                .split_once(':')
                .ok_or_else(|| EogError::Parse(format!("expected clique:KIND:N, got `{spec}`")))?;
            let kind: CliqueKind = kind.parse()?;
            Ok(canonical_clique(parse_size(n)?, kind))
        }
        _ => match spec.strip_prefix('d').map(str::parse::<usize>) {
            Some(Ok(n)) => d_graph(n),
            _ => Err(EogError::Parse(format!("unknown pattern `{spec}`"))),
        },
    }
}
