use thiserror::Error;

/// Errors raised by polynomial, resultant and inversion routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The polynomial has all coefficients equal to zero, so its power-basis
    /// degree is undefined.
    #[error("polynomial is identically zero")]
    ZeroPolynomial,

    /// Degree reduction was asked to fit a polynomial into a basis too small
    /// to represent it.
    #[error("polynomial of power degree {actual} is not representable in degree {requested}")]
    NotRepresentable { actual: usize, requested: usize },

    /// Two polynomials that must share a nominal Bernstein degree do not.
    #[error("Bernstein degrees differ: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    /// The operation needs polynomials of degree at least one.
    #[error("operation requires Bernstein degree at least 1")]
    DegreeTooSmall,

    /// An exact-arithmetic-only operation was invoked on float scalars.
    #[error("operation requires exact scalars; use the SVD rank decision for floats")]
    NotExact,

    /// A matrix handed to the SVD contains NaN or infinite entries.
    #[error("matrix contains non-finite entries")]
    NonFinite,

    /// A rational parametrization was evaluated where its denominator vanishes.
    #[error("denominator vanishes at the evaluation parameter")]
    DenominatorZero,

    /// The nullspace vector has no usable consecutive component pair.
    #[error("nullspace vector has no usable component pair")]
    DegenerateVector,

    /// Curve construction data violates a structural invariant.
    #[error("invalid curve data: {0}")]
    InvalidCurve(String),
}
