use thiserror::Error;

/// Errors raised by the library. Every variant corresponds to a rejected
/// input; none of them indicate an internal failure.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a partition needs at least one part")]
    EmptyPartition,
    #[error("part {0} is not a positive integer")]
    NonPositivePart(i64),
    #[error("part {0} occurs more than once")]
    DuplicatePart(u32),
    #[error("parts must be strictly increasing ({prev} is followed by {next})")]
    NotIncreasing { prev: u32, next: u32 },
    #[error("operation requires at least {needed} parts, got {got}")]
    TooFewParts { needed: usize, got: usize },
    #[error("weight {0} is too small: unrefinable partitions exist only for weights above 2")]
    WeightTooSmall(u64),
    #[error("the minimal excludant is 0 (no missing parts), so no forbidden vector exists")]
    MexUndefined,
    #[error("at least {needed} missing parts are required, got {got}")]
    TooFewMissing { needed: usize, got: usize },
    #[error("gap {0} is not a positive integer")]
    NonPositiveGap(i64),
    #[error("gap {0} occurs more than once")]
    DuplicateGap(u32),
    #[error("gaps must be strictly increasing ({prev} is followed by {next})")]
    GapsNotIncreasing { prev: u32, next: u32 },
    #[error("the numerical set has no gaps")]
    NoGaps,
    #[error("the numerical set is not closed under addition ({left} + {right} = {sum} is a gap)")]
    NotSemigroup { left: u32, right: u32, sum: u32 },
    #[error("a generating set needs at least one positive integer")]
    EmptyGenerators,
    #[error("generator {0} is not a positive integer")]
    NonPositiveGenerator(i64),
    #[error("generators have gcd {0}, so the generated monoid is not cofinite")]
    NotCofinite(u32),
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("{what} = {value} exceeds the cap {cap}")]
    CapExceeded { what: &'static str, value: u64, cap: u64 },
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("{0} is excluded: the identity is stated for primes greater than 3")]
    PrimeTooSmall(u32),
    #[error("invalid family parameters: {0}")]
    InvalidQuery(String),
}

pub type Result<T> = std::result::Result<T, Error>;
