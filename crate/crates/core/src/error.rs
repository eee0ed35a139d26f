use std::fmt;

use thiserror::Error;

use crate::tree::Label;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// A text-format error with the byte offset where it was detected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(position: usize, message: impl Into<String>) -> Self {
        Self {
            position,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at position {}: {}", self.position, self.message)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error {0}")]
    Parse(ParseError),

    // trees
    #[error("{0} is not a leaf of the tree")]
    InvalidLeaf(Label),
    #[error("quartet arguments must be four distinct leaves")]
    DegenerateQuartet,
    #[error("need at least {needed} leaves, got {got}")]
    TooFewLeaves { needed: usize, got: usize },
    #[error("ordered tree needs at least 3 leaves for a root decomposition")]
    TooSmall,
    #[error("planar data is inconsistent: {0}")]
    NotPlanar(String),
    #[error("not a boron tree: {0}")]
    InvalidTree(String),

    // posets and instances
    #[error("vectors of different length ({0} vs {1})")]
    ArityMismatch(usize, usize),
    #[error("object does not belong to instance {0}")]
    InstanceMismatch(String),

    // algebra
    #[error("polynomials live in different rings")]
    RingMismatch,
    #[error("the zero polynomial has no initial term")]
    ZeroPolynomial,
    #[error("invalid renaming: {0}")]
    BadRenaming(String),
    #[error("inputs are not homogeneous of one common degree")]
    NotHomogeneous,

    // systems
    #[error("object of size {size} exceeds the bound {bound}")]
    OutOfRange { size: usize, bound: usize },
    #[error("instance {0} has no ordering")]
    NoOrdering(String),
    #[error("generator {0} is not a monomial")]
    NotMonomial(String),
    #[error("functor is not concrete: {0}")]
    NotConcrete(String),
    #[error("no forgetful functor from {0} to {1}")]
    NoSuchFunctor(String, String),
    #[error("chain is not ascending at level {level}, object {object}: {generator} is not in the next ideal")]
    NotAChain {
        level: usize,
        object: String,
        generator: String,
    },
}

impl From<ParseError> for Error {
    fn from(e: ParseError) -> Self {
        Error::Parse(e)
    }
}
