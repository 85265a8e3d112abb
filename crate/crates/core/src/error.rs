use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts must be weakly decreasing (part {index} is {value}, previous is {prev})")]
    NotDecreasing { index: usize, prev: usize, value: usize },

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("cell ({row}, {col}) is not in the diagram")]
    CellOutOfDiagram { row: usize, col: usize },

    #[error("number of runners must be at least 2, got {0}")]
    InvalidRunners(usize),

    #[error("core partition has a hook of length {t}")]
    NotACore { t: usize },

    #[error("quotient must have {expected} entries, got {found}")]
    QuotientArity { expected: usize, found: usize },

    #[error("moduli list is empty")]
    EmptyModuli,

    #[error("modulus {0} is below 2")]
    InvalidModulus(usize),

    #[error("infinitely many simultaneous cores (gcd={gcd})")]
    InfiniteFamily { gcd: usize },

    #[error("moduli have gcd 1; the family of simultaneous cores is finite")]
    FiniteFamily,

    #[error("{s} and {t} are not coprime")]
    NotCoprime { s: usize, t: usize },

    #[error("enumeration bound {bound} exceeds the ceiling {ceiling}")]
    BoundExceeded { bound: usize, ceiling: usize },

    #[error("k must be at least {min}, got {k}")]
    InvalidK { k: usize, min: usize },

    #[error("square side must be at least 1")]
    InvalidSide,

    #[error("abacus is not the expected shape: {0}")]
    ShapeMismatch(String),

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}
