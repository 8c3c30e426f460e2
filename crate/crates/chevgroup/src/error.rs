use exactring::RingError;
use rootsys::{RootError, SystemType};
use thiserror::Error;

use crate::Realization;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChevError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Root(#[from] RootError),
    #[error("realization {0:?} is not available for {1}")]
    RealizationMismatch(Realization, SystemType),
    #[error("word belongs to {0}, group is {1}")]
    SystemMismatch(SystemType, SystemType),
    #[error("commutator relation needs non-proportional roots")]
    Proportional,
    #[error("cannot parse word: {0}")]
    Parse(String),
    #[error("torus index {0} out of range")]
    TorusIndex(usize),
    #[error("{0}")]
    Internal(String),
}
