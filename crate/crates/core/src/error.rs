use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid row (len {len}, start {start}) for modulus {modulus}")]
    InvalidRow {
        len: usize,
        start: usize,
        modulus: usize,
    },
    #[error("invalid grading: {0}")]
    InvalidGrading(String),
    #[error("modulus mismatch: diagram has {diagram}, grading has {grading}")]
    ModulusMismatch { diagram: usize, grading: usize },
    #[error("dimension mismatch: expected {expected:?}, found {found:?}")]
    DimensionMismatch {
        expected: Vec<usize>,
        found: Vec<usize>,
    },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("inconsistent stratum: {0}")]
    InconsistentStratum(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
