use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("{kind} at line {line}")]
    Parse { line: usize, kind: ParseErrorKind },

    #[error("node {node} out of range (graph has {node_count} nodes)")]
    InvalidNode { node: usize, node_count: usize },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("source {0} is not in the restricted node set")]
    SourceOutsideScope(usize),

    #[error("ternary tree of depth {0} overflows the node count")]
    DepthOverflow(u32),

    #[error("probability {0} outside [0, 1]")]
    InvalidProbability(f64),

    #[error("eccentricity undefined on disconnected scope")]
    DisconnectedScope,

    #[error("all-pairs oracle limited to {cap} nodes, graph has {node_count}")]
    OracleCapExceeded { node_count: usize, cap: usize },

    #[error("graph is empty")]
    EmptyGraph,

    #[error("box radius must be at least 1")]
    InvalidRadius,

    #[error("cover describes {cover} nodes but graph has {graph}")]
    NodeCountMismatch { graph: usize, cover: usize },

    #[error("invalid cover: {0}")]
    InvalidCover(String),

    #[error("invalid benchmark configuration: {0}")]
    BenchConfig(String),

    #[error("I/O error: {0}")]
    Io(String),

    #[error("no route from {s} to {t}")]
    NoRoute { s: usize, t: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseErrorKind {
    Malformed,
    InvalidWeight,
    SelfLoop,
    DuplicateEdge,
}

impl std::fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ParseErrorKind::Malformed => "malformed line",
            ParseErrorKind::InvalidWeight => "invalid weight",
            ParseErrorKind::SelfLoop => "self-loop",
            ParseErrorKind::DuplicateEdge => "duplicate edge",
        })
    }
}
