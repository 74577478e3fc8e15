use thiserror::Error;

/// Errors raised by the arithmetic kernel.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MathError {
    #[error("0/0 is indeterminate")]
    Indeterminate,
    #[error("entry count {entries} does not match a {rows}x{cols} matrix")]
    Shape {
        rows: usize,
        cols: usize,
        entries: usize,
    },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("division is not exact: {0}")]
    InexactDivision(String),
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("matrix has determinant {0}, expected 1")]
    NotUnimodular(String),
    #[error("{0} and {1} are not Farey neighbors")]
    NotFareyNeighbors(String, String),
}

/// Errors from the slope and surgery calculus.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurgeryError {
    #[error(transparent)]
    Math(#[from] MathError),
    /// A required hypothesis does not hold for the given arguments.
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    /// An internal consistency check failed. Always a bug.
    #[error("internal invariant failed: {0}")]
    Internal(String),
}

/// Errors from surfaces, monodromy words and open book computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OpenBookError {
    #[error(transparent)]
    Math(#[from] MathError),
    #[error("invalid surface: {0}")]
    InvalidSurface(String),
    #[error("unknown curve {0:?}")]
    UnknownCurve(String),
    #[error("unknown arc {0:?}")]
    UnknownArc(String),
    #[error("unknown boundary component {0:?}")]
    UnknownBoundary(String),
    #[error("cannot parse monodromy word: {0}")]
    WordParse(String),
    #[error("no arc chain connects {reference:?} to {target:?}")]
    DisconnectedArcs { reference: String, target: String },
    #[error("boundary {0:?} has no boundary-parallel curve")]
    MissingBoundaryCurve(String),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Surgery(#[from] SurgeryError),
}

/// Errors from braid words and their invariants.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error(transparent)]
    Math(#[from] MathError),
    #[error("cannot parse braid word: {0}")]
    Parse(String),
    #[error("generator s{index} out of range for {strands} strands")]
    GeneratorOutOfRange { index: usize, strands: usize },
    #[error("a braid needs at least 2 strands, got {0}")]
    TooFewStrands(usize),
}
