use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EogError {
    #[error("line {line}: malformed header, expected `n m`")]
    MalformedHeader { line: usize },
    #[error("line {line}: malformed edge line `{text}`")]
    MalformedEdge { line: usize, text: String },
    #[error("header announces {expected} edges but {found} were given")]
    EdgeCountMismatch { expected: usize, found: usize },
    #[error("endpoint {vertex} out of range for {n} vertices")]
    EndpointOutOfRange { vertex: usize, n: usize },
    #[error("duplicate edge {u}-{v}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("two edges carry the same label {label}")]
    TiedLabels { label: String },
    #[error("either every edge line carries a label or none does")]
    MixedLabels,
    #[error("{0:?} is not a permutation of 1..k")]
    NotAPermutation(Vec<usize>),
    #[error("patterns must have at least one edge")]
    EmptyPattern,
    #[error("pattern has no root vertex")]
    UnrootedPattern,
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("edge {u}-{v} does not join a left and a right vertex")]
    SideViolation { u: usize, v: usize },
    #[error("graph is not a star forest")]
    NotStarForest,
    #[error("graph is not complete")]
    NotComplete,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("search budget exhausted after {nodes} nodes")]
    BudgetExceeded { nodes: u64 },
    #[error("no canonical edge-order of K_{{{k}x{n}}} avoids the family")]
    NoAvoidingOrder { k: usize, n: usize },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, EogError>;
