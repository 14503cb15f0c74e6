use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} is out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("loop at vertex {0}")]
    Loop(usize),

    #[error("duplicate edge {0:?}")]
    DuplicateEdge(Vec<usize>),

    #[error("edge {edge:?} has {found} distinct vertices, expected {expected}")]
    EdgeSize {
        edge: Vec<usize>,
        expected: usize,
        found: usize,
    },

    #[error("at most {max} vertices are supported, got {n}")]
    TooManyVertices { n: usize, max: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("graph is not chordal")]
    NotChordal,

    #[error("complex has more than {cap} faces")]
    ComplexTooLarge { cap: usize },

    #[error("uniformity {m} is outside 1..={max}")]
    BadUniformity { m: usize, max: usize },

    #[error("the ideal is zero; projective dimension of the quotient is 0")]
    ZeroIdeal,

    #[error("length mismatch: {left} shifts but {right} Betti numbers")]
    LengthMismatch { left: usize, right: usize },

    #[error("the zero polynomial is divisible by every power of (1 - z)")]
    ZeroPolynomial,

    #[error("shifts must be strictly increasing")]
    NonIncreasingShifts,

    #[error("oracle limited to n <= {cap}, got n = {n}")]
    TooLarge { n: usize, cap: usize },

    #[error("bad parameters: {0}")]
    BadParams(String),
}
