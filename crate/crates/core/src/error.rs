use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus {0} is not a prime in [2, 2^31)")]
    NonPrimeModulus(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse {input:?} as an element of {field}")]
    ParseElement { input: String, field: String },
    #[error("cannot parse field specifier {0:?} (expected gf<p> or q)")]
    ParseField(String),
    #[error("zero polynomial where a nonzero form was required")]
    ZeroForm,
    #[error("combination of forms vanished: {0}")]
    ZeroResult(String),
    #[error("sequence is all zero")]
    AllZeroSequence,
    #[error("empty sequence")]
    EmptySequence,
    #[error("index {index} out of range {lo}..={hi}")]
    IndexOutOfRange { index: i64, lo: i64, hi: i64 },
    #[error("elements from different fields")]
    FieldMismatch,
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
    #[error("search space {size} exceeds the limit of {limit} candidates")]
    SearchSpaceTooLarge { size: u128, limit: u128 },
    #[error("exhaustive search needs a finite field")]
    InfiniteField,
    #[error("leading monomials do not bound a finite staircase")]
    InfiniteStaircase,
    #[error("malformed input: {0}")]
    Malformed(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
