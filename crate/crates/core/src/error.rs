use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("graph has {n} vertices, at most {max} are supported")]
    TooManyVertices { n: usize, max: usize },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("invalid adjacency: {0}")]
    InvalidAdjacency(String),

    #[error("improper coloring: {0}")]
    ImproperColoring(String),

    #[error("graph6 parse error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("graph has no edges")]
    Edgeless,

    #[error("graph has no vertices")]
    NoVertices,

    #[error("graph is not regular")]
    NotRegular,

    #[error("graph has no positive eigenvector: {0}")]
    NoPositiveEigenvector(String),

    #[error("eigensolver did not converge within {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    #[error("coloring is not a Hoffman coloring: {0}")]
    NotHoffmanColoring(String),

    #[error("precondition failed for class {class}: {reason}")]
    CompositionPrecondition { class: usize, reason: String },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("integer overflow in exact arithmetic")]
    Overflow,
}
