use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid edge {a}-{b} for K_{}", 2 * .n)]
    InvalidEdge { a: usize, b: usize, n: usize },

    #[error("pair index {index} out of range 1..={max}")]
    PairIndexOutOfRange { index: usize, max: usize },

    #[error("invalid ordering: {0}")]
    InvalidOrdering(String),

    #[error("not a perfect matching: {0}")]
    NotPerfectMatching(String),

    #[error("not a 1-factorization: {0}")]
    NotFactorization(String),

    #[error("malformed coloring: {0}")]
    MalformedColoring(String),

    #[error("coloring is not an interval coloring: {0}")]
    NotInterval(String),

    #[error("color {color} out of range 1..={t}")]
    ColorOutOfRange { color: u32, t: u32 },

    #[error("invalid labeled factorization: {0}")]
    InvalidLabeledFactorization(String),

    #[error("only {available} splittable matchings, {wanted} requested")]
    InsufficientSplits { available: usize, wanted: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal inconsistency: {0}")]
    Inconsistency(String),

    #[error("document error: {0}")]
    Document(String),
}
