//! Computational tools for edge-ordered graphs.
//!
//! The crate decides containment between edge-ordered graphs, enumerates the
//! canonical edge-orders of complete and complete multipartite graphs, decides
//! order chromatic numbers of finite families, builds the standard extremal
//! constructions and computes exact Turán numbers for small vertex counts.

pub mod canonical;
pub mod constructions;
pub mod containment;
pub mod dsword;
pub mod error;
pub mod format;
pub mod graph;
pub mod key;
pub mod matrix;
pub mod orderchrom;
pub mod pattern;
pub mod search;
pub mod verify;

pub use canonical::{canonical_clique, enumerate_canonical, knn_can, CanonicalSpec, CliqueKind};
pub use containment::{avoids_family, contains, side_contains, Embedding};
pub use error::{EogError, Result};
pub use format::{parse_eog, serialize_eog};
pub use graph::{cycle_pattern, path_pattern, EdgeOrderedGraph, Side, SidedPattern, SimpleGraph};
pub use key::{are_isomorphic, canonical_key, CanonicalKey};
pub use orderchrom::ChiResult;
pub use pattern::parse_pattern;
pub use search::{can_avoid, ex_exact, lex_exact, Budget, LexResult, SearchStatus};
