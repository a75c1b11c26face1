use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex index {index} out of range (polytope has {count} vertices)")]
    VertexOutOfRange { index: usize, count: usize },

    #[error("expected two distinct vertices, got {0} twice")]
    SameVertex(usize),

    #[error("set width {found} does not match ambient dimension {expected}")]
    WidthMismatch { expected: usize, found: usize },

    #[error("ragged matrix: row {row} has {found} entries, expected {expected}")]
    RaggedMatrix {
        row: usize,
        expected: usize,
        found: usize,
    },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("polytope has no vertices")]
    NoVertices,

    #[error("vertex {vertex} violates equality row {row}")]
    EqualityViolated { vertex: usize, row: usize },

    #[error("vertex {vertex} has negative coordinate {coordinate}")]
    NegativeCoordinate { vertex: usize, coordinate: usize },

    #[error("vertex {second} duplicates vertex {first}")]
    DuplicateVertex { first: usize, second: usize },

    #[error("invalid H-representation: {0}")]
    InvalidHRepresentation(String),

    #[error("vertices {0} and {1} are not complementary")]
    NotComplementary(usize, usize),

    #[error("unsupported polytope: {0}")]
    Unsupported(String),

    #[error("walk exceeded its budget of {budget} steps")]
    WalkBudgetExceeded { budget: usize },

    #[error("pair count overflow for {vertices} vertices")]
    CountOverflow { vertices: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("line {line}: malformed rational {token:?}")]
    MalformedRational { line: usize, token: String },

    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
}

impl Error {
    /// Whether the error stems from bad input data rather than from a
    /// polytope that lacks a property an operation requires.
    pub fn is_validation(&self) -> bool {
        !matches!(
            self,
            Error::Unsupported(_) | Error::WalkBudgetExceeded { .. }
        )
    }
}
