use thiserror::Error;

/// Errors raised by the arithmetic and classification routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    /// Trial division stopped at `bound` with a composite cofactor left over.
    #[error("factorization incomplete: composite cofactor {cofactor} has no factor up to {bound}")]
    FactorizationIncomplete { cofactor: u64, bound: u64 },

    /// The local search reached its maximal modulus without a decision.
    #[error("local search at {place} undecided up to exponent {bound}")]
    OracleUndecided { place: String, bound: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidArgument(msg.into()))
}
