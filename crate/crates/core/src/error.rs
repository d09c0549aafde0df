use thiserror::Error;

/// Errors raised by the enumeration, series and bijection layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("n = {n} exceeds the enumeration bound {bound}")]
    ResourceLimit { n: usize, bound: usize },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("{0} is not in the image of the map")]
    NotInImage(String),
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
