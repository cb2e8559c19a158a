use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QhError {
    #[error("system is not quasi-homogeneous")]
    NotQuasiHomogeneous,
    #[error("weight vector {0} does not satisfy the weight equations")]
    WeightMismatch(String),
    #[error("weight vector {0} is not minimal")]
    NotMinimal(String),
    #[error("system is homogeneous; no quasi-homogeneous decomposition")]
    Homogeneous,
}
