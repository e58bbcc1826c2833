//! Error type shared across the crate.

use std::fmt;

/// Errors raised by evaluation, arithmetic and class-field routines.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// The point is not in the complex upper half plane.
    NotInUpperHalfPlane,
    /// |q| >= 1, so no q-series converges.
    DegenerateNome,
    /// The index vector is congruent to 0 mod Z^2.
    ZeroVector,
    /// The Weierstrass function was requested at a lattice point.
    PoleAtLatticePoint,
    /// The matrix is not invertible modulo its level.
    SingularMatrix,
    /// The element generates an ideal not coprime to N.
    NotCoprime,
    /// The integer is not a fundamental discriminant.
    NotFundamental,
    /// The fields Q(i) and Q(sqrt(-3)) are excluded.
    ExcludedField,
    /// The discriminant is not negative.
    NotImaginary,
    /// A polynomial coefficient was too far from an integer.
    RoundingFailure { residual: f64 },
    /// The expression cannot be transformed by this matrix
    /// (non-modular expression under a non-SL2 action).
    UnsupportedExpr,
    /// Levels of the operands do not match.
    LevelMismatch { expected: i64, found: i64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotInUpperHalfPlane => write!(f, "point is not in the upper half plane"),
            Error::DegenerateNome => write!(f, "|q| >= 1: nome is degenerate"),
            Error::ZeroVector => write!(f, "index vector is zero mod Z^2"),
            Error::PoleAtLatticePoint => write!(f, "pole: evaluation point lies on the lattice"),
            Error::SingularMatrix => write!(f, "matrix is singular modulo the level"),
            Error::NotCoprime => write!(f, "element is not coprime to the level"),
            Error::NotFundamental => write!(f, "not a fundamental discriminant"),
            Error::ExcludedField => write!(f, "Q(i) and Q(sqrt(-3)) are excluded"),
            Error::NotImaginary => write!(f, "discriminant is not negative"),
            Error::RoundingFailure { residual } => {
                write!(f, "coefficient rounding failed (residual {residual:.3e}); increase precision")
            }
            Error::UnsupportedExpr => {
                write!(f, "non-modular expression supports only SL2 actions")
            }
            Error::LevelMismatch { expected, found } => {
                write!(f, "level mismatch: expected {expected}, found {found}")
            }
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
