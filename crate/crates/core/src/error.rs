//! Error types shared across the crate.
//!
//! Three failure families matter to callers: inputs outside an operation's
//! domain ([`Error::Domain`]), candidate data rejected by the validation
//! pipeline with a stated reason ([`Error::Rejected`]), and internal
//! consistency checks failing on data that was accepted
//! ([`Error::Inconsistency`] — always a bug or corrupted input, never
//! expected in normal operation).

/// Crate-wide result alias.
pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Why a candidate quadruple was rejected by validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RejectReason {
    /// A tuple sum fails its required normalization.
    Sum(String),
    /// A gcd/connectedness condition fails.
    Gcd(String),
    /// An entry is out of range or a tuple is too short.
    Range(String),
    /// The data is well-formed but does not define a surface with a
    /// one-dimensional space of 2-forms.
    Hodge(String),
}

impl std::fmt::Display for RejectReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RejectReason::Sum(s)
            | RejectReason::Gcd(s)
            | RejectReason::Range(s)
            | RejectReason::Hodge(s) => write!(f, "{s}"),
        }
    }
}

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Input outside the domain of an operation (bad modulus, non-unit
    /// inverse, formula evaluated where it is not valid, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// Candidate data rejected by validation, with the reason.
    #[error("rejected: {0}")]
    Rejected(RejectReason),

    /// An internal invariant failed on accepted data; indicates a bug.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn inconsistency(msg: impl Into<String>) -> Self {
        Error::Inconsistency(msg.into())
    }

    /// True for rejection errors (invalid candidate data, not bugs).
    pub fn is_rejection(&self) -> bool {
        matches!(self, Error::Rejected(_))
    }
}
