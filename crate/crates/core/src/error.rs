//! Error type shared across the crate.
//!
//! Everything here signals misuse of the API or an internal consistency
//! violation; none of these conditions occur while verifying a well-formed
//! algebra configuration end to end.

use thiserror::Error;

/// Crate-wide error enumeration.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Multiplicative inverse of the zero element was requested.
    #[error("division by zero in scalar field")]
    DivisionByZero,

    /// Two vectors (or matrices) over lattices of different ranks were
    /// combined.
    #[error("rank mismatch: expected rank {expected}, got {got}")]
    RankMismatch { expected: u32, got: u32 },

    /// A basis or root index lies outside the range valid for the algebra.
    #[error("index out of range: {what} {index} not valid for n = {n}")]
    IndexOutOfRange {
        what: &'static str,
        index: i64,
        n: u32,
    },

    /// The requested rank is not admissible for the family.
    #[error("invalid rank: family {family} requires n >= {min} (and n = 2 for the triality case), got {got}")]
    InvalidRank {
        family: &'static str,
        min: u32,
        got: u32,
    },

    /// A quadratic monomial did not consist of one plain and one starred
    /// factor after expansion.
    #[error("unsupported quadratic shape: each monomial must pair one plain factor with one starred factor")]
    UnsupportedQuadraticShape,

    /// A Cartan matrix entry failed to come out as an integer — this would
    /// mean the root data and symmetrizers are inconsistent.
    #[error("internal consistency error: Cartan entry ({i},{j}) is not an integer")]
    NonIntegerCartanEntry { i: usize, j: usize },

    /// An adjoint chain contained a generator that is not of `X`-type.
    #[error("non-X generator in adjoint chain: only X(+a_i) / X(-a_i) may act")]
    NonXGenerator,

    /// A zero mode was requested under the half-integer mode scheme, where
    /// zero modes do not exist.
    #[error("mode 0 does not exist under the half-integer mode scheme")]
    ZeroModeUnderHalf,

    /// A zero mode acted under the integer mode scheme without an explicit
    /// convention for its action on the vacuum.
    #[error("zero-mode action is unspecified under the integer mode scheme; select an explicit zero-mode convention")]
    ZeroModeUnspecified,
}
