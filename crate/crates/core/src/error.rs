use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("loop edge ({0}, {0}) is not allowed in a simple graph")]
    LoopEdge(usize),

    #[error("{family}: parameter {value} below minimum {min}")]
    ParameterBelowMinimum {
        family: &'static str,
        value: usize,
        min: usize,
    },

    #[error("line graph is undefined for a graph without edges")]
    NoEdges,

    #[error("graph of order {n} exceeds the {what} cap of {cap}")]
    TooLarge { what: &'static str, n: usize, cap: usize },

    #[error("{0} is not a minimum super dominating set")]
    NotMinimum(String),

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
