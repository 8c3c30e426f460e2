use chevgroup::ChevError;
use exactring::RingError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShaError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Chev(#[from] ChevError),
    #[error("group order exceeds the cap of {0} elements")]
    CapExceeded(usize),
    #[error("group of order {0} needs the slow opt-in")]
    NeedsSlow(usize),
    #[error("matrix entry is not a residue mod {0}")]
    NotModular(u64),
    #[error("{0}")]
    Invalid(String),
}
