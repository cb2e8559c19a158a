use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("system is not homogeneous")]
    NotHomogeneous,
    #[error("components share the factor {0}")]
    CommonFactor(String),
    #[error("x Q - y P vanishes identically; every direction is invariant")]
    RadialField,
    #[error("value is not a root of G(1, u)")]
    NotARoot,
    #[error("interval refinement did not separate the root")]
    RefinementExhausted,
}
