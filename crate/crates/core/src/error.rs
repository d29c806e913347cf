use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("element set must be non-empty")]
    EmptySet,
    #[error("item {item} is outside [1, {q}]")]
    ItemOutOfRange { item: usize, q: usize },
    #[error("instance needs at least one element and one item (n = {n}, q = {q})")]
    DegenerateInstance { n: usize, q: usize },
    #[error("assignment covers {got} elements but the system has {expected}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("item index {k} is outside [{lo}, {hi}]")]
    BadItemIndex { k: usize, lo: usize, hi: usize },
    #[error("solution is a base of its item class; it has no parent")]
    IsBase,
    #[error("minimum common item is {actual}, expected {expected}")]
    WrongItemClass { expected: usize, actual: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("source and sink coincide at vertex {0}")]
    SameTerminals(usize),
    #[error("coefficients of {0} are not monotone")]
    NonMonotoneCoefficients(String),
    #[error("guard violated: {0}")]
    Guard(String),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
