use thiserror::Error;

/// Errors raised by the arithmetic, symbol and verification layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} must be odd and positive")]
    BadModulus(i64),
    #[error("{a} is not a quadratic residue modulo {p}")]
    NonResidue { a: i64, p: u64 },
    #[error("symbol undefined: {0}")]
    SymbolUndefined(String),
    #[error("{0} is not squarefree")]
    NotSquarefree(i64),
    #[error("invalid quadratic field parameter m = {0}")]
    InvalidField(i64),
    #[error("coordinates ({x}, {y})/2 do not define an integer of Q(sqrt({m}))")]
    NotIntegral { m: i64, x: String, y: String },
    #[error("operands live in different fields (m = {0} and m = {1})")]
    FieldMismatch(i64, i64),
    #[error("element has even norm")]
    EvenNorm,
    #[error("operation requires a real quadratic field, got m = {0}")]
    ImaginaryField(i64),
    #[error("2 does not split in Q(sqrt({0}))")]
    TwoNotSplit(i64),
    #[error("{ell} is inert in the field of discriminant {disc}")]
    Inert { ell: u64, disc: i64 },
    #[error("{ell} ramifies in the field of discriminant {disc}")]
    Ramified { ell: u64, disc: i64 },
    #[error("{0} is not a positive fundamental discriminant")]
    NotFundamental(i64),
    #[error("form discriminant {0} must be positive and non-square")]
    BadFormDiscriminant(i64),
    #[error("element lies in the ideal (residue symbol is 0)")]
    NotCoprime,
    #[error("ideal must be odd, primitive and squarefree for a residue symbol")]
    UnsupportedIdeal,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("internal check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn precondition<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Precondition(msg.into()))
}
