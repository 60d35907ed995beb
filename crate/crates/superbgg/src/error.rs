use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degenerate invariant form: {0}")]
    DegenerateForm(String),
    #[error("unsupported algebra: {0}")]
    UnsupportedAlgebra(String),
    #[error("finite-dimensionality guard exceeded after {0} height levels")]
    FiniteDimGuardExceeded(usize),
    #[error("algebra is not of type I: {0}")]
    NotTypeI(String),
    #[error("subspace is not closed under the Levi action: {0}")]
    LeviNotClosed(String),
    #[error("module is not completely reducible in degree {0}")]
    NotCompletelyReducible(usize),
    #[error("truncation too small: weight may occur up to degree {needed}, built {built}")]
    TruncationTooSmall { needed: usize, built: usize },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("Levi factor is not contained in the even part")]
    LeviNotInEvenPart,
    #[error("unknown scenario: {0}")]
    UnknownScenario(String),
    #[error("parse error at position {pos}: {msg}")]
    ParseError { pos: usize, msg: String },
    #[error("length mismatch: expected {expected} coordinates, got {got}")]
    LengthMismatch { expected: String, got: String },
    #[error("invalid index: {0}")]
    InvalidIndex(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    /// Variant name, for machine-readable reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DegenerateForm(_) => "DegenerateForm",
            Error::UnsupportedAlgebra(_) => "UnsupportedAlgebra",
            Error::FiniteDimGuardExceeded(_) => "FiniteDimGuardExceeded",
            Error::NotTypeI(_) => "NotTypeI",
            Error::LeviNotClosed(_) => "LeviNotClosed",
            Error::NotCompletelyReducible(_) => "NotCompletelyReducible",
            Error::TruncationTooSmall { .. } => "TruncationTooSmall",
            Error::PreconditionViolated(_) => "PreconditionViolated",
            Error::LeviNotInEvenPart => "LeviNotInEvenPart",
            Error::UnknownScenario(_) => "UnknownScenario",
            Error::ParseError { .. } => "ParseError",
            Error::LengthMismatch { .. } => "LengthMismatch",
            Error::InvalidIndex(_) => "InvalidIndex",
            Error::Internal(_) => "Internal",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
