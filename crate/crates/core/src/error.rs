use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("zero vector has no primitive representative")]
    ZeroVector,

    #[error("the zero cone has no nonzero relative interior point")]
    ZeroCone,

    #[error("unknown color `{0}`")]
    UnknownColor(String),

    #[error("duplicate color name `{0}`")]
    DuplicateColor(String),

    #[error("fan is complete (the variety is compact)")]
    IsCompact,

    #[error("ambient rank {rank} exceeds the arrangement limit {limit}")]
    RankTooLarge { rank: usize, limit: usize },

    #[error("invalid root datum: {0}")]
    InvalidRootDatum(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
