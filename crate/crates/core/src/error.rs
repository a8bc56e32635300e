use thiserror::Error;

/// Errors raised by graph construction, pattern parsing, enumeration and I/O.
#[derive(Debug, Error)]
pub enum Error {
    /// A parameter lies outside the domain an operation is defined on.
    #[error("parameter out of domain: {0}")]
    Domain(String),

    /// A vertex, edge or color that does not exist in the structure queried.
    #[error("lookup failed: {0}")]
    Lookup(String),

    /// The boundary arc of a hub-centered copy does not fit on the rim.
    #[error("pattern cycle length {t} does not fit on a rim of length {d}")]
    InfeasibleArc { t: usize, d: usize },

    /// The hypotheses of a counting lemma are not met; the check was skipped.
    #[error("lemma hypotheses not met: {0}")]
    HypothesesUnmet(String),

    /// A coloring file that does not follow the JSON schema.
    #[error("schema error at byte {offset}: {message}")]
    Schema { offset: usize, message: String },

    /// An internal consistency check failed.
    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
