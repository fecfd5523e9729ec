//! Error type shared across the crate.

/// Errors reported by parsing, arithmetic and the basis algorithms.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Two values from different variable contexts were combined.
    #[error("variable context mismatch")]
    ContextMismatch,

    /// A specialization did not assign a value to every parameter.
    #[error("specialization arity mismatch: expected {expected} values, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    /// A coefficient denominator vanishes at the requested specialization.
    #[error("denominator vanishes at the given specialization")]
    Pole,

    /// Leading data or index was requested for the zero polynomial.
    #[error("undefined for the zero polynomial")]
    ZeroPolynomial,

    /// Every input generator was zero.
    #[error("ideal given by all-zero generators")]
    ZeroIdeal,

    /// A computation that needs a finite quotient got an infinite one.
    #[error("ideal is not zero-dimensional")]
    NotZeroDimensional,

    /// The parameter variety has a point with an irrational coordinate.
    #[error("parameter variety contains a non-rational point (unsupported instance)")]
    NonRationalPoint,

    /// A monomial set is not closed under divisors.
    #[error("monomial set is not an order ideal (not divisor-closed)")]
    NotDivisorClosed,

    /// Input did not have the expected prebasis shape.
    #[error("shape violation: {0}")]
    ShapeViolation(String),

    /// Syntax error in a system file or expression.
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse {
        line: usize,
        col: usize,
        msg: String,
    },

    /// Anything else the caller asked for that this build does not cover.
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
