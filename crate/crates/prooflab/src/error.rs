use chevgroup::ChevError;
use decomp::DecompError;
use exactring::RingError;
use rootsys::RootError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProofError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Chev(#[from] ChevError),
    #[error(transparent)]
    Decomp(#[from] DecompError),
    #[error(transparent)]
    Root(#[from] RootError),
    #[error("invalid record {0}: {1}")]
    Record(String, String),
    #[error("cannot read catalog: {0}")]
    Catalog(String),
    #[error("unknown stage {0}")]
    UnknownStage(String),
    #[error("{0}")]
    Unsupported(String),
}
