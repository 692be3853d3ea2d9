use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("geometric sum over the identity monomial")]
    TrivialBase,
    #[error("polynomial is not divisible by the given divisor")]
    NotDivisible,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("evaluation point has a zero coordinate")]
    ZeroEvaluationPoint,
    #[error("bad commutator indices ({i},{j}) for rank {rank}")]
    BadIndices { i: usize, j: usize, rank: usize },
    #[error("generator index {index} out of range 1..={rank}")]
    BadIndex { index: usize, rank: usize },
    #[error("token `{token}` at {pos}: index out of range 1..={rank}")]
    IndexOutOfRange { token: String, pos: usize, rank: usize },
    #[error("syntax error at {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("element is not in the commutator subgroup")]
    NotInCommutant,
    #[error("natural number is not a valid code")]
    NotACode,
    #[error("bad coordinates: {0}")]
    BadCoordinates(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("zero polynomial cannot be separated")]
    ZeroPolynomial,
    #[error("exponent does not evaluate to an integer at this point")]
    NonIntegerExponent,
    #[error("integer overflow")]
    Overflow,
    #[error("value too large: {0}")]
    TooLarge(String),
}

impl Error {
    /// Errors caused by malformed text rather than by the mathematics.
    pub fn is_syntax(&self) -> bool {
        matches!(self, Error::Syntax { .. } | Error::IndexOutOfRange { .. })
    }
}
