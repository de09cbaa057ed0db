use thiserror::Error;

/// Everything that can go wrong inside the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IpfError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("not a permutation of 1..={n}: {image:?}")]
    NotAPermutation { n: usize, image: Vec<i64> },
    #[error("coordinate {value} at position {index} is not a positive integer")]
    NonPositiveCoordinate { index: usize, value: i64 },
    #[error("point {point:?} lies outside the domain filter generated by {generator:?}")]
    OutsideDomain {
        point: Vec<i64>,
        generator: Vec<i64>,
    },
    #[error("dimension {n} exceeds the configured cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("element is not an idempotent")]
    NotIdempotent,
    #[error("integer overflow in coordinate arithmetic")]
    Overflow,
    #[error("box bound {bound} is too small (need at least {needed})")]
    BoxTooSmall { bound: i64, needed: i64 },
    #[error("box bounds differ: {left} vs {right}")]
    BoxMismatch { left: i64, right: i64 },
    #[error("grid map is not an order isomorphism between principal filters: {0}")]
    NotOrderIso(String),
    #[error("box is too small to recover the element: {0}")]
    InsufficientBox(String),
    #[error("normal subgroup failed its coset-form check: {0}")]
    RepresentationFailure(String),
    #[error("range is not a proper subfilter of the domain (need x <= y and x != y)")]
    NotProperEmbedding,
    #[error("generator index {index} out of range for dimension {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("invalid suite configuration: {0}")]
    InvalidConfig(String),
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
}

pub type Result<T, E = IpfError> = std::result::Result<T, E>;

pub(crate) fn ensure_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(IpfError::DimensionMismatch { expected, found })
    }
}
