use chevgroup::ChevError;
use exactring::RingError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecompError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Chev(#[from] ChevError),
    #[error("ring {0} lacks the rule {1}^2 -> 0")]
    MissingRule(String, String),
    #[error("no factorization: {0}")]
    NoFactorization(String),
    #[error("element does not lie in the elementary group")]
    ElementNotInGroup,
    #[error("search space of {size} exceeds the cap {cap}")]
    TooLarge { size: u128, cap: u128 },
    #[error("{0}")]
    Unsupported(String),
}
