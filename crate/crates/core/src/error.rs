use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("part values must be positive integers")]
    ZeroPart,

    #[error("partition weight does not fit in 64 bits")]
    WeightOverflow,

    #[error("invalid partition literal {0:?}: expected comma-separated positive integers")]
    Parse(String),

    #[error("matrix base {0} is not odd")]
    EvenBase(u64),

    #[error("cell ({row}, {col}) lies beyond the last representable diagonal {max}")]
    CellOutOfRange { row: u32, col: u32, max: u32 },

    #[error("cell permutation is not injective: two cells land on ({row}, {col})")]
    Collision { row: u32, col: u32 },

    #[error("modulus d must be at least 2, got {0}")]
    InvalidModulus(u64),

    #[error("part {part} is divisible by d = {d}")]
    PartDivisible { part: u64, d: u64 },

    #[error("part {part} appears {count} times; multiplicities must be at most {max}")]
    MultiplicityTooLarge { part: u64, count: u64, max: u64 },

    #[error("exponent p must be at least 2, got {0}")]
    InvalidExponent(u32),

    #[error("family selector was built for p = {selector}, but the map was called with p = {requested}")]
    SelectorMismatch { selector: u32, requested: u32 },

    #[error("invalid family selector: {0}")]
    InvalidSelector(String),
}
