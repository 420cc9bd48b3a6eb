use thiserror::Error;

use crate::catalog::Violation;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero scalar")]
    DegenerateScalar,

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("matrix is singular")]
    Singular,

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("matrix is not skew-symmetric")]
    NotSkew,

    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },

    #[error("subalgebra has no identity element")]
    NoIdentity,

    #[error("subalgebra of dimension {dim} is not a recognized simple type")]
    Unrecognized { dim: usize },

    #[error("invalid spec: {}", join_violations(.0))]
    SpecInvalid(Vec<Violation>),

    #[error("embedding unavailable: {0}")]
    EmbeddingUnavailable(String),

    #[error("subalgebras differ in type or ambient")]
    MismatchedAlgebra,

    #[error("associative envelope is not semisimple: {0}")]
    EnvelopeNotSemisimple(String),

    #[error("element does not lie in the ambient algebra")]
    AmbientMismatch,

    #[error("operation not supported on ambient {0}")]
    UnsupportedAmbient(String),

    #[error("no nondegenerate automorphism found for this seed")]
    DegenerateSeed,

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

fn join_violations(v: &[Violation]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}

impl Error {
    /// True for errors caused by bad input rather than a broken internal invariant.
    pub fn is_validation(&self) -> bool {
        !matches!(self, Error::Invariant(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
