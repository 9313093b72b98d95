use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    IndexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("malformed graph6 header: {0}")]
    MalformedHeader(String),
    #[error("graph6 bitstream truncated: expected {expected} data bytes, found {found}")]
    TruncatedBitstream { expected: usize, found: usize },
    #[error("invalid graph6 character {0:?}")]
    InvalidCharacter(char),
    #[error("malformed edge list at line {line}: {reason}")]
    MalformedEdgeList { line: usize, reason: String },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has {n} vertices, exceeding the exact-search cap of {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("operation requires at least {min} vertices, graph has {n}")]
    TooSmall { n: usize, min: usize },
    #[error("vertex set is not a resolving set")]
    NotResolving,
    #[error("vertex {0} is not a grid vertex")]
    NotGridVertex(usize),
    #[error("vertices {0} and {1} do not form a diagonal pair")]
    NotDiagonalPair(usize, usize),
    #[error("invalid family spec: {0}")]
    InvalidSpec(String),
    #[error("no construction covers dim = {a}, upper dim = {b}")]
    OutOfFormulaRange { a: usize, b: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
