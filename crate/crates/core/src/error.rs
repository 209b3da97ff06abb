use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid d-partition: {0}")]
    InvalidDPartition(String),
    #[error("{inner} is not contained in {outer}")]
    NotASkewShape { outer: String, inner: String },
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("shape has {shape} cells but weight has size {weight}")]
    SizeMismatch { shape: usize, weight: usize },
    #[error("invalid cycle pattern: {0}")]
    InvalidPattern(String),
    #[error("index {index} is not in the index set of the pattern")]
    IndexOutOfPattern { index: usize },
    #[error("weight {m} out of range for n = {n}")]
    WeightOutOfRange { n: usize, m: usize },
    #[error("YTL defined for n ≥ 3 (got n = {0})")]
    RankTooSmall(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("algebra parameters differ: ({0}, {1}) vs ({2}, {3})")]
    ParameterMismatch(usize, usize, usize, usize),
    #[error("cannot parse rational: {0}")]
    InvalidRational(String),
    #[error("specialisation u = {0} is not allowed")]
    BadSpecialisation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
