use alloc::string::String;

/// Errors raised by the core algorithms.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph on {0} vertices exceeds the bit-set capacity of {cap}", cap = crate::MAX_VERTICES)]
    TooManyVertices(usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("vertex set must be non-empty")]
    EmptySet,
    #[error("vertex set does not span a clique")]
    NotAClique,
    #[error("pattern has no dominating vertex")]
    NoDominatingVertex,
    #[error("cycle weight undefined: size {size} is below the clique order {t}")]
    UndefinedWeight { size: usize, t: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("enumeration cap exceeded: {what} = {value} > {cap}")]
    CapExceeded { what: &'static str, value: usize, cap: usize },
    #[error("malformed graph6 input: {0}")]
    Graph6(String),
    #[error("malformed hypergraph: {0}")]
    Hypergraph(String),
    #[error("unknown pattern name `{0}`")]
    UnknownPattern(String),
}

pub type Result<T> = core::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}
