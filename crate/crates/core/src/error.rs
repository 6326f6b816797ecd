use thiserror::Error;

/// Everything that can go wrong in the library. Mathematical verdicts
/// ("the identity fails") are never errors; they live in `CheckReport`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("input error: {0}")]
    Input(String),

    #[error("matrix is singular")]
    Singular,

    #[error("map is not an Inv-derivation: {0}")]
    NotInvDer(String),

    #[error("map is not a Rota-Baxter operator: {0}")]
    NotRotaBaxter(String),

    #[error("maps do not commute: {0}")]
    CommutationFailure(String),

    #[error("operator is not idempotent")]
    NotIdempotent,

    #[error("operator is not multiplicative: {0}")]
    NotMultiplicative(String),

    #[error("source structure fails its axioms: {0}")]
    SourceAxiomFailure(String),

    #[error("dendriform symmetry x<y = y>x fails: {0}")]
    SymmetryPreconditionFailure(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}
