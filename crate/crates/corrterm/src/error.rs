//! Error type shared by every module of the crate.

use core::fmt;

/// All the ways a computation in this crate can be rejected.
///
/// Every variant is an input problem; the numeric kernels themselves are
/// total on validated inputs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// `gcd(p, q) != 1` where coprimality is required.
    NotCoprime { p: i64, q: i64 },
    /// A lens-space or surgery order `p` outside `p >= 1`.
    InvalidOrder { p: i64 },
    /// A surgery coefficient `p/q` with `p <= 0` or `q <= 0`.
    NonPositiveSlope { p: i64, q: i64 },
    /// Spin^c index `i` outside `0..=p-1`.
    SpincOutOfRange { i: i64, p: i64 },
    /// Torus-knot parameters must be distinct coprime integers `>= 2`.
    InvalidTorusParams { p: i64, q: i64 },
    /// Malformed `exponent:coefficient` token in Alexander polynomial input.
    MalformedCoeffPair,
    /// The same exponent appeared twice in Alexander polynomial input.
    DuplicateExponent { exponent: i64 },
    /// An explicit zero coefficient in Alexander polynomial input.
    ZeroCoefficient { exponent: i64 },
    /// A negative exponent in the non-negative half of Alexander polynomial input.
    NegativeExponent { exponent: i64 },
    /// The symmetrized polynomial does not evaluate to 1 at t = 1.
    NotNormalized { value_at_one: i64 },
    /// The polynomial coefficients are not alternating +1, -1, ... from the top.
    NotLSpaceForm,
    /// A V-sequence that is empty, does not end in 0, or has a step outside {0, 1}.
    InvalidViSequence,
    /// `l` outside the admissible range `0..=(p-1)(q-1)/2` of the sum identity.
    EllOutOfRange { ell: i64, max: i64 },
    /// `j` outside `0..=p*q` in `alpha(j) = min(j, pq - j)`.
    AlphaOutOfRange { j: i64, pq: i64 },
    /// Reducible-surgery hypothesis requires `p > q >= 1` coprime.
    InvalidHypothesis { p: i64, q: i64 },
    /// Thickness bounds require `p > q > 1` coprime with both `p` and `q` odd.
    ParityViolation { p: i64, q: i64 },
    /// The p - q = 2 reconstruction is only defined for odd `q >= 3`.
    InvalidReconstructionParam { q: i64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotCoprime { p, q } => write!(f, "gcd({p}, {q}) != 1"),
            Error::InvalidOrder { p } => write!(f, "order p must satisfy p >= 1, got {p}"),
            Error::NonPositiveSlope { p, q } => {
                write!(f, "surgery coefficient {p}/{q} must be positive")
            }
            Error::SpincOutOfRange { i, p } => {
                write!(f, "spin^c index {i} outside 0..={}", p - 1)
            }
            Error::InvalidTorusParams { p, q } => {
                write!(f, "torus knot needs distinct coprime parameters >= 2, got ({p}, {q})")
            }
            Error::MalformedCoeffPair => {
                write!(f, "expected comma-separated `exponent:coefficient` pairs")
            }
            Error::DuplicateExponent { exponent } => {
                write!(f, "duplicate exponent {exponent}")
            }
            Error::ZeroCoefficient { exponent } => {
                write!(f, "zero coefficient at exponent {exponent}")
            }
            Error::NegativeExponent { exponent } => {
                write!(f, "negative exponent {exponent}; supply only the non-negative half")
            }
            Error::NotNormalized { value_at_one } => {
                write!(f, "polynomial evaluates to {value_at_one} at t = 1, expected 1")
            }
            Error::NotLSpaceForm => {
                write!(f, "coefficients do not alternate +1, -1, ... from the top exponent")
            }
            Error::InvalidViSequence => {
                write!(f, "V-sequence must be non-empty, end in 0, with steps in {{0, 1}}")
            }
            Error::EllOutOfRange { ell, max } => {
                write!(f, "l = {ell} outside 0..={max}")
            }
            Error::AlphaOutOfRange { j, pq } => {
                write!(f, "alpha argument {j} outside 0..={pq}")
            }
            Error::InvalidHypothesis { p, q } => {
                write!(f, "reducible hypothesis needs coprime p > q >= 1, got ({p}, {q})")
            }
            Error::ParityViolation { p, q } => {
                write!(f, "thickness bounds need odd coprime p > q > 1, got ({p}, {q})")
            }
            Error::InvalidReconstructionParam { q } => {
                write!(f, "reconstruction needs odd q >= 3, got {q}")
            }
        }
    }
}

impl core::error::Error for Error {}

/// Convenience alias used throughout the crate.
pub type Result<T> = core::result::Result<T, Error>;
