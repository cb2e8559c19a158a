use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum OracleError {
    #[error("tolerance {0} outside [1e-12, 1e-3]")]
    BadTolerance(f64),
    #[error("bad window: {0}")]
    BadWindow(String),
    #[error("probe radius {0} must be finite and above the origin cutoff")]
    BadRadius(f64),
    #[error("{0} streamline seeds requested, at most 10000 allowed")]
    TooManySeeds(usize),
}
