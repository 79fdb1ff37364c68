use thiserror::Error;

use crate::slope::Slope;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("slope 0/0 is undefined")]
    UndefinedSlope,
    #[error("slope {0} is not an integer or reciprocal of an integer")]
    NotInOrder(Slope),
    #[error("slope {0} listed more than once")]
    DuplicateSlope(Slope),
    #[error("slope set is empty")]
    EmptySlopeSet,
    #[error("invalid slope token {0:?}")]
    InvalidSlopeToken(String),
    #[error("lattice dimensions must be positive, got {n}x{m}")]
    InvalidDims { n: usize, m: usize },
    #[error("cell ({i}, {j}) lies outside the {n}x{m} lattice")]
    CellOutOfBounds {
        i: usize,
        j: usize,
        n: usize,
        m: usize,
    },
    #[error("transform requires a square lattice, got {n}x{m}")]
    NonSquare { n: usize, m: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("index ({i}, {j}) out of range for a sequence of length {len}")]
    IndexOutOfRange { i: usize, j: usize, len: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("staircase with total {total} over {len} rows does not fit a {n}x{m} lattice")]
    StaircaseExceedsLattice {
        total: u64,
        len: usize,
        n: usize,
        m: usize,
    },
    #[error("search cap reached: no prefix through slope {cap} satisfies the condition")]
    CapExceeded { cap: Slope },
    #[error("empty value range {lo}..{hi}")]
    EmptyRange { lo: i64, hi: i64 },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("missing clue for slope {slope} offset {offset}")]
    MissingClue { slope: Slope, offset: i64 },
    #[error("duplicate clue for slope {slope} offset {offset}")]
    DuplicateClue { slope: Slope, offset: i64 },
    #[error("offset {offset} of slope {slope} does not meet the lattice")]
    UnrealizableOffset { slope: Slope, offset: i64 },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
