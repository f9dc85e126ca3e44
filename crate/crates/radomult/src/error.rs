use thiserror::Error;

#[derive(Error, Debug)]
pub enum Error {
    #[error("unsupported field order {0} (supported: 2, 3, 4, 5, 7, 8, 9)")]
    UnsupportedField(u64),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("enumeration infeasible: {space} raw colorings exceed the memory budget of {budget} bytes; raise --memory-budget to attempt it")]
    EnumerationInfeasible { space: String, budget: usize },

    #[error("linear system is not admissible for t = {t}: {reason}")]
    NotAdmissible { t: i32, reason: String },

    #[error("iterated bound hypothesis violated: recoloring the origin with color {color} changes the degenerate parameter ({got} != {expected})")]
    HypothesisViolated {
        color: u8,
        got: String,
        expected: String,
    },

    #[error("parse error in {path}: {msg}")]
    Parse { path: String, msg: String },

    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),

    #[error("certificate does not match the verification family: {0}")]
    FamilyMismatch(String),

    #[error("solution file does not match the problem: {0}")]
    SolutionMismatch(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
