use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The adaptive solver doubled its working precision up to the configured
    /// ceiling without certifying every root.
    #[error("precision exhausted at {bits} bits (residual bound {residual:e})")]
    PrecisionExhausted { bits: u32, residual: f64 },

    #[error("shifted polynomial is constant")]
    DegreeZero,

    #[error("degenerate geometry: {0}")]
    DegenerateGeometry(String),

    /// Substituting `x -> -x/2` into `U_n` produced a non-integer coefficient.
    #[error("coefficient of x^{degree} is not an integer: {value}")]
    NonIntegral { degree: usize, value: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
