use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("operands belong to different rings")]
    SpecMismatch,
    #[error("{0} is not a unit")]
    NotAUnit(String),
    #[error("unknown variable {0}")]
    UnknownVariable(String),
    #[error("variable {0} is not bound")]
    UnboundVariable(String),
    #[error("denominator {denominator} is not invertible modulo {modulus}")]
    DenominatorNotInvertible { denominator: String, modulus: u64 },
    #[error("invalid ring specification: {0}")]
    InvalidSpec(String),
    #[error("operation not supported in {0}")]
    Unsupported(String),
    #[error("parse error: {0}")]
    Parse(String),
}
