use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("extension degree {0} outside supported range 2..=16")]
    DegreeOutOfRange(u32),

    #[error("polynomial {poly:#x} is not primitive of degree {m}")]
    NotPrimitive { m: u32, poly: u32 },

    #[error("division by zero")]
    DivisionByZero,

    #[error("duplicate abscissa {0}")]
    DuplicateAbscissa(String),

    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("basis is not in Groebner shape: {0}")]
    NotGroebnerShape(String),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("merge did not reach threshold {target} even after pairwise fallback (delta {reached})")]
    FallbackExhausted { target: i64, reached: i64 },

    #[error("inexact division: polynomial is not an element of the transformed module")]
    InexactDivision,

    #[error("message degree {degree} is not below code dimension {k}")]
    DegreeTooHigh { degree: usize, k: usize },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Error {
        Error::Io(e.to_string())
    }
}
