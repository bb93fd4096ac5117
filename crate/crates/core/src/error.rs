use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("closure is not a knot: permutation cycles {cycles:?}")]
    NotAKnot { cycles: Vec<Vec<usize>> },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("generator index {index} out of range for {strands} strands")]
    BadGenerator { index: i32, strands: usize },
    #[error("inconsistent state labels at event {event}")]
    InconsistentState { event: usize },
    #[error("malformed diagram: {0}")]
    Diagram(String),
    #[error("writhe minus width plus one must be even, got w = {writhe}, m = {width}")]
    Parity { writhe: i32, width: usize },
    #[error("degenerate determinant")]
    DegenerateDeterminant,
    #[error("invalid parameter: {0}")]
    Parameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
