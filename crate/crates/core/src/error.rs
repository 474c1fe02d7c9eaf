use thiserror::Error;

/// Errors raised by the jump-loci computations.
///
/// Every variant corresponds to a violated precondition of some operation;
/// none of them indicate an internal failure.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("simplex {0:?} is not a face of the complex")]
    SimplexNotInComplex(Vec<usize>),

    #[error("vertex label {label} outside 1..={max}")]
    VertexOutOfRange { label: usize, max: usize },

    #[error("support of size {size} exceeds the enumeration limit {limit}")]
    SupportTooLarge { size: usize, limit: usize },

    #[error("operation requires a single Laurent variable, got {0}")]
    Multivariable(usize),

    #[error("degree {degree} out of range 0..={max}")]
    DegreeOutOfRange { degree: usize, max: usize },

    #[error("invalid algebra presentation: {0}")]
    InvalidAlgebra(String),

    #[error("invalid chain complex: {0}")]
    InvalidChainComplex(String),

    #[error("linear forms {0} and {1} are proportional")]
    ProportionalForms(usize, usize),

    #[error("the zero form does not define a line (form {0})")]
    ZeroForm(usize),

    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),

    #[error("no witness found with lattice search bound {bound}")]
    SearchExhausted { bound: u32 },

    #[error("certification failed: {0}")]
    CertificationFailed(String),

    #[error("{0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
