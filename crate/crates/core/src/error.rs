use alloc::string::String;

/// Errors raised by the computations in this crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("weights must all be at least 2, got ({0}, {1}, {2})")]
    InvalidWeights(i64, i64, i64),
    #[error("operation requires weight type (2,3,p), got ({0}, {1}, {2})")]
    NotTwoThree(i64, i64, i64),
    #[error("operands carry different weight triples")]
    WeightMismatch,
    #[error("quotient by an element of degree zero is infinite")]
    InfiniteQuotient,
    #[error("matrix is singular")]
    Singular,
    #[error("matrix is not unimodular")]
    NotUnimodular,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("representation is not a graded invariant subspace: {0}")]
    NotInNil(String),
    #[error("no null root: the tree is not extended Dynkin")]
    NoNullRoot,
    #[error("no phase assignment satisfies the constraints")]
    NoPhase,
    #[error("decomposition did not converge after {0} attempts")]
    DecompositionStalled(usize),
    #[error("out of range: {0}")]
    OutOfRange(String),
}

pub type Result<T> = core::result::Result<T, Error>;
