use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("{0} {1} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("not a path in the host graph: {0}")]
    NotAPath(String),
    #[error("subdivision length must be at least 1")]
    ZeroLength,
    #[error("invalid constellation: {0}")]
    InvalidConstellation(String),
    #[error("invalid seedling: {0}")]
    InvalidSeedling(String),
    #[error("invalid block: {0}")]
    InvalidBlock(String),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("input is not a tree: {0}")]
    NotATree(String),
    #[error("input too large: {0}")]
    TooLarge(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("unbound leaf {0}")]
    UnboundLeaf(String),
    #[error("unknown constant {0}")]
    UnknownConstant(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}
