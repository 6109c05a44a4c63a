use num_bigint::BigUint;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("enumerating {requested} items exceeds the budget of {budget}")]
    DepthLimit { requested: BigUint, budget: u64 },

    #[error("bit positions start at 1; position 0 is undefined")]
    PositionZero,

    #[error("offset {offset} is out of range for level {level} (must be below 2^{level})")]
    InvalidNode { level: u64, offset: BigUint },

    #[error("path sets are defined for depth >= 1")]
    ZeroDepth,

    #[error("a periodic pattern needs at least one bit")]
    EmptyPattern,

    #[error("unknown claim id `{0}` (expected C1 through C10)")]
    UnknownClaim(String),
}
