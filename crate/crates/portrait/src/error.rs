use homoganalysis::AnalysisError;
use homogenize::HomogError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PortraitError {
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
    #[error(transparent)]
    Homog(#[from] HomogError),
    #[error("inconsistent portrait: {0}")]
    Inconsistent(String),
    #[error("not a member of {family}: {reason}")]
    WrongFamily { family: &'static str, reason: String },
    #[error("components share a common factor")]
    CommonFactor,
    #[error("no table row matches {0}")]
    NoRowMatched(String),
    #[error("several labels match {signature}: {labels:?}")]
    Ambiguous { signature: String, labels: Vec<String> },
}
