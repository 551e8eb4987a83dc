use rug::Integer;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Every failure the library can report.
///
/// Variants carry enough context to print a useful message; the CLI maps
/// [`Error::Parse`] to exit code 2 and everything else to exit code 3.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("radicand {0} is a perfect square")]
    SquareDiscriminant(Integer),
    #[error("radicand must be positive, got {0}")]
    NonPositiveRadicand(Integer),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("value is rational")]
    RationalValue,
    #[error("linear-fractional map has a pole at the given point")]
    PoleHit,
    #[error("matrix is not unimodular (determinant {0})")]
    NotUnimodular(Integer),
    #[error("continued fraction needs a non-empty period")]
    EmptyPeriod,
    #[error("degenerate periodic word: {0}")]
    DegenerateWord(String),
    #[error("degenerate fixed point: {0}")]
    DegenerateFixedPoint(String),
    #[error("invalid quadratic coefficients: {0}")]
    InvalidCoefficients(String),
    #[error("expected {expected} entries, got {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("scan bound must be at least 1")]
    InvalidBound,
    #[error("census input contains a non-member point {0}")]
    NonMemberPresent(String),
    #[error("alpha has a pole at t = {0}")]
    PoleInAlpha(String),
    #[error("singular fiber at t = {0}")]
    SingularFiber(String),
    #[error("entry {index} is not an integer at t = {t}")]
    NonIntegerEntry { index: usize, t: String },
    #[error("entry {index} = {value} must be at least 1 (t = {t})")]
    NonCanonicalEntry {
        index: usize,
        value: Integer,
        t: String,
    },
    #[error("[p; 2p] != sqrt(1+p^2) for p = {0}")]
    IdentityViolation(Integer),
    #[error("D = {0} must be square-free and greater than 1")]
    InvalidD(Integer),
    #[error("conductor must be at least 1, got {0}")]
    InvalidConductor(Integer),
    #[error("{0}")]
    OutOfRange(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}
