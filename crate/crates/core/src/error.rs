use thiserror::Error;

/// Errors raised anywhere in the library.
///
/// Variants are grouped by the layer that raises them; callers that need a
/// coarse classification (for example an exit code) can use [`Error::kind`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: Q(sqrt {left}) vs Q(sqrt {right})")]
    FieldMismatch { left: u64, right: u64 },
    #[error("division is not exact; remainder {remainder}")]
    RemainderNonzero { remainder: String },

    #[error("not a rational set: {0}")]
    NotARationalSet(String),
    #[error("duplicate point: {0}")]
    DuplicatePoint(String),
    #[error("general position violated by points {witness:?}")]
    GeneralPositionViolated { witness: Vec<usize> },

    #[error("degenerate curve: {0}")]
    DegenerateCurve(String),
    #[error("curve has an isotropic line component through the origin")]
    IsotropicComponent,
    #[error("unsupported degree {degree} (maximum {max})")]
    UnsupportedDegree { degree: usize, max: usize },
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("reducible curve: {0}")]
    ReducibleCurve(String),
    #[error("wrong case: {0}")]
    WrongCase(String),
    #[error("degenerate parameter t = {t}: {reason}")]
    DegenerateParameter { t: String, reason: String },
    #[error("candidate pool exhausted: {0}")]
    PoolExhausted(String),
    #[error("factors {first} and {second} share a root")]
    CommonRoot { first: String, second: String },
    #[error("polynomial has a multiple root; gcd with derivative is {gcd}")]
    MultipleRoot { gcd: String },
    #[error("invalid configuration: {0}")]
    InvalidConfiguration(String),
    #[error("needs more points: {0}")]
    NeedsMorePoints(String),
    #[error("not certifiable without a genus assertion: {0}")]
    NotCertifiableWithoutAssertion(String),
    #[error("search too large: estimated {estimate} steps exceeds limit {limit}")]
    SearchTooLarge { estimate: u128, limit: u128 },

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

/// Coarse classification of an [`Error`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// The input was malformed or violated a precondition.
    Input,
    /// A property the caller asked about does not hold (a verified "false").
    Violation,
    /// The library caught itself in a contradiction.
    Internal,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::InternalInconsistency(_) => ErrorKind::Internal,
            Error::NotARationalSet(_)
            | Error::GeneralPositionViolated { .. }
            | Error::MultipleRoot { .. }
            | Error::CommonRoot { .. } => ErrorKind::Violation,
            _ => ErrorKind::Input,
        }
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}
