use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomogError {
    #[error("weight vector {0} does not satisfy the weight equations")]
    WeightMismatch(String),
    #[error("weight vector {0} is not minimal")]
    NotMinimal(String),
    #[error("substitution did not produce a polynomial system")]
    NonPolynomial,
    #[error("substitution did not produce a homogeneous system")]
    NotHomogeneousResult,
    #[error("transformed system has a vanishing component")]
    Degenerate,
    #[error("both weight exponents are even; the weight vector cannot be minimal")]
    BothEven,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PullbackError {
    #[error("point lies on an axis where the substitution is not invertible")]
    NonInvertible,
    #[error("point lies outside the chart {0}")]
    OutsideChart(&'static str),
}
