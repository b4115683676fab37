use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed permutation: {0}")]
    MalformedPermutation(String),

    #[error("invalid degree: {0}")]
    InvalidDegree(String),

    #[error("index {index} out of range 1..={bound}")]
    IndexOutOfRange { index: usize, bound: usize },

    #[error("arity mismatch: width {left} vs width {right}")]
    WidthMismatch { left: usize, right: usize },

    #[error("degree of the zero polynomial is undefined")]
    UndefinedDegree,

    #[error("dimension {r} out of range 0..={d}")]
    RangeError { r: usize, d: usize },

    #[error("infeasible poset: minimal element {minimal} exceeds ceiling {ceiling}")]
    InfeasiblePoset { minimal: String, ceiling: String },

    #[error("empty support: a poset needs at least one minimal element")]
    EmptySupport,

    #[error("hypothesis violated: the Schubert polynomial of {w} has a coefficient larger than 1")]
    HypothesisViolated { w: String },

    #[error("truncation degree {d} is below the required degree {needed}")]
    TruncationDegree { d: usize, needed: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
