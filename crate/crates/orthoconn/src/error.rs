use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A bottom Pochhammer symbol vanished before the series terminated.
    #[error("bottom parameter #{index} vanishes at term {term} before termination")]
    BottomPole { index: usize, term: usize },
    #[error("series does not terminate: no top parameter is a nonpositive integer")]
    NotTerminating,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("parity mismatch: degree {n} and parity weight {eps} differ by an odd number")]
    ParityMismatch { n: usize, eps: usize },
    #[error("polynomials are not scalar multiples of each other")]
    NotProportional,
    #[error("sum of square roots spans {classes} square classes and is not of the form sign*sqrt(q)")]
    IrreducibleSum { classes: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },
}

pub type Result<T> = std::result::Result<T, Error>;
