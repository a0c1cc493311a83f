//! Error type shared by every module of the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Every failure the library can report.
///
/// Parameter and input problems are the caller's fault; the remaining
/// variants signal a broken internal invariant (an exactness assertion that
/// should hold for all valid inputs) and carry enough context to locate the
/// offending degree.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("malformed input: {0}")]
    Parse(String),

    #[error("degree [0,0] is not allowed here")]
    ZeroDegree,

    #[error("series contexts disagree: d = {0} vs d = {1}")]
    MismatchedContext(i64, i64),

    #[error("denominator has zero constant term")]
    ZeroConstantTerm,

    #[error("exact division left a remainder at height {height}")]
    NonzeroRemainder { height: i64 },

    #[error("exact division failed at exponent {exponent}")]
    NonIntegralQuotient { exponent: usize },

    #[error("value at {at} is not an integer multiple as required")]
    NonIntegral { at: String },

    #[error("coefficient at {degree} is negative: {value}")]
    NegativeCoefficient { degree: String, value: String },

    #[error("support violation at {degree}: {reason}")]
    SupportViolation { degree: String, reason: String },

    #[error("internal consistency check failed: {0}")]
    ConsistencyCheck(String),

    #[error("I/O failure: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl Error {
    /// Exit code the CLI maps this error to: 2 for parameter or input
    /// mistakes, 3 for internal assertion failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidParameter(_)
            | Error::Parse(_)
            | Error::ZeroDegree
            | Error::ZeroConstantTerm => 2,
            _ => 3,
        }
    }
}
