use thiserror::Error;

use crate::tower::Cell;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("letters of a word must be positive")]
    ZeroLetter,
    #[error("labels must be positive")]
    ZeroLabel,
    #[error("word is not reduced")]
    NotReduced,
    #[error("cell ({0}, {1}) is not in the Rothe diagram")]
    NotInRotheDiagram(usize, usize),
    #[error("cell ({}, {}) is not in the tower diagram", .0.col, .0.ht)]
    NotInDiagram(Cell),
    #[error("cell ({}, {}) is not a corner", .0.col, .0.ht)]
    NotACorner(Cell),
    #[error("tableau is not standard")]
    NotStandard,
    #[error("tableau is not semi-standard")]
    NotSemistandard,
    #[error("tableau is empty")]
    EmptyTableau,
    #[error("labeling is not injective")]
    NotInjective,
    #[error("labeling is not balanced at hook ({0},{1})")]
    NotBalanced(usize, usize),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
