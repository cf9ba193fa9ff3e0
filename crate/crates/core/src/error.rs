use thiserror::Error;

/// Errors raised by the combinatorial routines.
///
/// `CertificateFailed` and `RouteDisagreement` mean an internal consistency
/// check failed, not that the input was bad.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Cartan spec: {0}")]
    InvalidSpec(String),
    #[error("custom lattice is not integral: {0}")]
    NonIntegralLattice(String),
    #[error("objects belong to different root data: {0}")]
    DatumMismatch(String),
    #[error("coweight {0:?} is not dominant")]
    NotDominant(Vec<i64>),
    #[error("subset {0:?} is not spherical")]
    NotSpherical(Vec<usize>),
    #[error("subset {0:?} is not contained in the finite simple reflections")]
    NotFinite(Vec<usize>),
    #[error("expected a unique maximum in {0}, found incomparable maxima")]
    NotUnique(String),
    #[error("{0:?} is not a nonnegative combination of simple coroots")]
    NotNonnegative(Vec<i64>),
    #[error("element {0} is not admissible")]
    NotAdmissible(String),
    #[error("K1 {0:?} is not contained in K2 {1:?}")]
    NotNested(Vec<usize>, Vec<usize>),
    #[error("element {0} is not a stratum label for this pair of levels")]
    NotAStratum(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("certificate failed: {0}")]
    CertificateFailed(String),
    #[error("coweight {0:?} is not regular")]
    NotRegular(Vec<i64>),
    #[error("irreducibility routes disagree for mu={mu:?}, K={k:?}")]
    RouteDisagreement { mu: Vec<i64>, k: Vec<usize> },
    #[error("group too large for exhaustive enumeration (more than {0} elements)")]
    TooLarge(u64),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
