//! Error type shared by the whole crate.

/// Everything that can go wrong in exact (R,p,q) arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A denominator evaluated to zero at the requested point.
    #[error("denominator vanishes at the evaluation point")]
    ZeroDenominator,
    /// The scheme's deformation function is singular at these parameters
    /// (e.g. the Quesne family at pq = 1).
    #[error("deformation scheme is singular at the given parameters")]
    SingularParameters,
    /// An argument that must be nonnegative was negative.
    #[error("argument must be nonnegative")]
    NegativeArgument,
    /// An index was outside its admissible range.
    #[error("index out of range")]
    OutOfRange,
    /// A custom scheme was used in a context that needs a phi triple.
    #[error("scheme carries no phi triple")]
    MissingPhiTriple,
    /// A phi function vanished at (p, q) where a nonzero value is required.
    #[error("phi function vanishes at the given parameters")]
    ZeroPhi,
    /// The operation is not defined for this scheme kind.
    #[error("operation is not supported for this scheme")]
    UnsupportedScheme,
    /// Some deformed number `[n]` with 1 <= n <= cutoff is not positive.
    #[error("deformed spectrum is not positive up to the requested cutoff")]
    NonPositiveSpectrum,
    /// A Laurent polynomial in u that should be palindromic is not.
    #[error("polynomial is not palindromic")]
    NotPalindromic,
    /// Laurent exponents of both parities were mixed in one u-polynomial.
    #[error("mixed exponent parities in u-polynomial")]
    ParityMismatch,
    /// A rational literal could not be parsed.
    #[error("invalid rational literal")]
    InvalidRational,
    /// A scheme constructor rejected its data.
    #[error("invalid scheme: {0}")]
    InvalidScheme(&'static str),
    /// A parameter pair was rejected.
    #[error("invalid parameters: {0}")]
    InvalidParameters(&'static str),
}

pub type Result<T> = core::result::Result<T, Error>;
