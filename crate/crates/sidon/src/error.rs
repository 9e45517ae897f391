//! Crate-wide error type.

/// Errors produced by the library.
///
/// All operations are total on valid inputs; errors only report invalid
/// inputs or exhausted resource budgets, never mathematical outcomes
/// ("not a Sidon set" is a [`Verdict`](crate::verify::Verdict), not an error).
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A magnitude bound that must be strictly positive was zero.
    #[error("invalid bound: expected a strictly positive magnitude, got {0}")]
    InvalidBound(String),

    /// Attempted to build a p-adic absolute value from a composite modulus.
    #[error("{0} is not prime")]
    NotPrime(u64),

    /// A magnitude was constructed from a negative rational.
    #[error("magnitude must be nonnegative, got {0}")]
    NegativeMagnitude(String),

    /// Two positions of an input sequence hold the same value.
    #[error("duplicate element {value} at positions {first} and {second}")]
    DuplicateElement {
        value: String,
        first: usize,
        second: usize,
    },

    /// An input sequence that must be nonempty was empty.
    #[error("empty input: at least one element is required")]
    EmptyInput,

    /// A 1-based index fell outside the inhabited range.
    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    /// The summand split `r` of a shifted sumset fell outside `0..=h`.
    #[error("summand count r = {r} must satisfy 0 <= r <= h = {h}")]
    ShiftOutOfRange { r: u32, h: u32 },

    /// The two coefficient maps of a would-be collision are identical.
    #[error("not a collision: the two representations are identical")]
    NotACollision,

    /// A weight vector's positive part exceeds the requested order.
    #[error("order mismatch: positive part sums to {positive} > h = {h}")]
    OrderMismatch { positive: u64, h: u32 },

    /// A witness or weight vector failed its structural invariants.
    #[error("invalid witness: {0}")]
    InvalidWitness(String),

    /// A weight vector failed its structural invariants.
    #[error("invalid weight vector: {0}")]
    InvalidWeightVector(String),

    /// A perturbation plan is unusable as stated.
    #[error("invalid plan: {0}")]
    InvalidPlan(String),

    /// A sampler could not produce the requested configuration.
    #[error("sampler error: {0}")]
    Sampler(String),

    /// An exhaustive enumeration would exceed the configured budget.
    #[error("budget exceeded: {needed} subsets > limit {limit}")]
    BudgetExceeded { needed: u128, limit: u128 },

    /// A token could not be parsed as an exact rational.
    #[error("cannot parse {token:?} as a rational: {reason}")]
    ParseRational { token: String, reason: String },
}

/// Shorthand used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
