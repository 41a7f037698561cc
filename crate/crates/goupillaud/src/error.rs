//! Crate-wide error type.
//!
//! Every fallible operation returns [`Result`]. Domain violations are loud:
//! nothing extrapolates past a simulated window or clamps silently.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("drift must be strictly positive, got {0}")]
    NonPositiveDrift(f64),

    #[error("invalid parameter: {0}")]
    BadParameter(String),

    #[error("window [{lo}, {hi}] must be nonempty and contain 0")]
    BadWindow { lo: f64, hi: f64 },

    #[error("invalid refinement level: {0}")]
    BadLevel(String),

    #[error("time {t} outside simulated window [{lo}, {hi}]")]
    OutOfWindow { t: f64, lo: f64, hi: f64 },

    #[error("value {x} outside attained range [{lo}, {hi}]")]
    OutOfRange { x: f64, lo: f64, hi: f64 },

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("solution fields do not share an evaluation grid")]
    GridMismatch,

    #[error("L^p exponent must satisfy p >= 1 and be finite, got {0}")]
    BadExponent(f64),

    #[error("quadrature bandwidth must be strictly positive, got {0}")]
    BadBandwidth(f64),

    #[error("quadrature needs at least 2 steps, got {0}")]
    BadSteps(usize),

    #[error("initial data has no closed-form absolutely integrable Fourier transform")]
    TransformUnavailable,

    #[error("driver mismatch: expected {0}")]
    WrongDriver(&'static str),

    #[error("config error (line {line}): {msg}")]
    Config { line: usize, msg: String },

    #[error("parse error (line {line}): {msg}")]
    Parse { line: usize, msg: String },

    #[error("i/o: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl Error {
    /// Process exit code for the CLI: config/parse problems exit 2,
    /// runtime domain errors exit 3.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config { .. } | Error::Parse { .. } => 2,
            _ => 3,
        }
    }
}
