use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph order {0} outside the supported range")]
    OrderOutOfRange(usize),
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("({0}, {1}) is not an edge")]
    NotAnEdge(usize, usize),
    #[error("vertex set is empty")]
    EmptySet,
    #[error("isomorphism test limited to order 12, got {0}")]
    OrderTooLargeForIsomorphism(usize),
    #[error("exact coloring limited to order 12, got {0}")]
    OrderTooLargeForColoring(usize),
    #[error("perfection test limited to order 12, got {0}")]
    OrderTooLargeForPerfection(usize),
    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),
    #[error("graph6 order {0} is not supported (max 64)")]
    UnsupportedOrder(usize),
    #[error("malformed edge list: {0}")]
    MalformedEdgeList(String),
    #[error("corpus line {line}: {message}")]
    MalformedCorpus { line: usize, message: String },
    #[error("graph is not split")]
    NotSplit,
    #[error("invalid KS-partition: {0}")]
    InvalidPartition(String),
    #[error("KS-partition sizes |K|={k}, |S|={s} match none of the three cases (omega={omega}, alpha={alpha})")]
    UnclassifiablePartition { k: usize, s: usize, omega: usize, alpha: usize },
    #[error("graph has no induced C4")]
    NoInducedC4,
    #[error("graph has no induced 2K2")]
    NoInduced2K2,
    #[error("graph is a star K_1,{0}")]
    IsStar(usize),
    #[error("graph is not pseudo-split (contains an induced 2K2 or C4)")]
    NotPseudoSplit,
}
