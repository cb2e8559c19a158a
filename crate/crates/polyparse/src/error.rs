use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("non-rational literal `{text}` at line {line}, column {col}")]
    NonRationalLiteral { line: usize, col: usize, text: String },
    #[error("zero system: P·Q is identically zero")]
    ZeroSystem,
}
