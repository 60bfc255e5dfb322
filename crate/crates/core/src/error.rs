use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("vertex out of range: {0}")]
    VertexOutOfRange(String),
    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("color {color} outside 1..={k}")]
    ColorOutOfRange { color: u64, k: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("no component {component} in color {color}")]
    DanglingComponent { color: u8, component: u32 },
    #[error("empty vertex set")]
    EmptyInstance,
    #[error("guard exceeded: {0}")]
    GuardExceeded(String),
    #[error("invalid hypergraph: {0}")]
    InvalidHypergraph(String),
    #[error("hypergraph is not intersecting: edges {0} and {1} are disjoint")]
    NotIntersecting(usize, usize),
    #[error("hypergraph has no partition")]
    NotPartitioned,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("spanning coloring impossible: vertex degree {degree} < {k} colors")]
    SpanningImpossible { degree: u64, k: usize },
    #[error("retries exhausted after {0} attempts")]
    RetriesExhausted(u64),
    #[error("coloring is not spanning: vertex {vertex} misses color {color}")]
    NotSpanning { vertex: usize, color: u8 },
    #[error("internal inconsistency: {0}")]
    Internal(String),
}
