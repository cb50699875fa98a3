use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("input error: {0}")]
    Input(String),
    #[error("relation rejected: {0}")]
    BadRelation(String),
    #[error("quotient not admissible: {0}")]
    NotAdmissible(String),
    #[error("field F_{p} too small for an algebra of dimension {dim}")]
    FieldTooSmall { p: u64, dim: usize },
    #[error("inconclusive: {0}")]
    Inconclusive(String),
    #[error("resolution truncated at cap {0}")]
    ResolutionTruncated(usize),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("non-integer multiplicity: {0}")]
    NonIntegerMultiplicity(String),
    #[error("power maps missing for degree {0}")]
    MissingPowerMaps(usize),
    #[error("enumeration incomplete")]
    IncompleteEnumeration,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
