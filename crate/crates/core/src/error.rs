use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(i32, i32),

    #[error("twist mismatch: {0}")]
    TwistMismatch(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("invalid presentation: {}", .0.join("; "))]
    InvalidPresentation(Vec<String>),

    #[error("presentation is not square")]
    NotSquare,

    #[error("presentation is not injective (determinant vanishes)")]
    NotInjective,

    #[error("Hilbert polynomial is {0}m + {1}, expected 6m + 3")]
    WrongHilbertPolynomial(i64, i64),

    #[error("Euler characteristic is not linear in the twist")]
    NonLinearHilbert,

    #[error("no stratum matches cohomology triple ({0}, {1}, {2})")]
    NoStratumMatch(usize, usize, usize),

    #[error("automorphism is not invertible")]
    NotInvertible,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("retry budget of {0} exhausted")]
    RetriesExhausted(usize),

    #[error("{0} is not a prime >= {1}")]
    BadPrime(u64, u64),

    #[error("internal consistency fault: {0}")]
    Internal(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// Stable kebab-case identifier, used by the command line and the C API.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DegreeMismatch(..) => "degree-mismatch",
            Error::TwistMismatch(_) => "twist-mismatch",
            Error::ShapeMismatch(_) => "shape-mismatch",
            Error::InvalidPresentation(_) => "invalid-presentation",
            Error::NotSquare => "not-square",
            Error::NotInjective => "not-injective",
            Error::WrongHilbertPolynomial(..) => "wrong-hilbert-polynomial",
            Error::NonLinearHilbert => "non-linear-hilbert",
            Error::NoStratumMatch(..) => "no-stratum-match",
            Error::NotInvertible => "not-invertible",
            Error::Parse(_) => "parse",
            Error::Precondition(_) => "precondition",
            Error::RetriesExhausted(_) => "retries-exhausted",
            Error::BadPrime(..) => "bad-prime",
            Error::Internal(_) => "internal",
            Error::Io(_) => "io",
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
