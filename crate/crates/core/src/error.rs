//! Error type shared across the crate.

use alloc::string::String;
use core::fmt;

/// Errors reported by matrix, cone and projection operations.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Two matrices have incompatible shapes for the requested operation.
    ShapeMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    /// Two vectors (or a vector and a set) have different dimensions.
    DimMismatch { left: usize, right: usize },
    /// A matrix does not have the shape an operation requires.
    WrongShape {
        expected: (usize, usize),
        found: (usize, usize),
    },
    /// A vector does not have the dimension an operation requires.
    WrongDim { expected: usize, found: usize },
    /// A matrix entry is bottom where a finite value is required.
    NotFinite { row: usize, col: usize },
    /// A raw float is NaN or infinite and cannot enter the semiring.
    InvalidNumber(f64),
    /// The operation needs a vector with at least one finite entry.
    EmptySupport,
    /// The chosen coordinate is not in the support of the reference vector.
    IndexNotInSupport { index: usize },
    /// The barycentric projection is only defined when the diagonal
    /// entries differ.
    ProjectionUndefined,
    /// The projected points collapse onto the triangle boundary, so the
    /// cevian construction is not well defined.
    DegenerateProjection,
    /// Collinear overlapping segments have no unique intersection point.
    AmbiguousIntersection,
    /// Barycentric coordinates must be nonnegative and sum to one.
    InvalidBarycentric { phi: [f64; 3] },
    /// Text input could not be parsed; the message carries the position.
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::ShapeMismatch { left, right } => write!(
                f,
                "shape mismatch: {}x{} vs {}x{}",
                left.0, left.1, right.0, right.1
            ),
            Self::DimMismatch { left, right } => {
                write!(f, "dimension mismatch: {left} vs {right}")
            }
            Self::WrongShape { expected, found } => write!(
                f,
                "expected a {}x{} matrix, found {}x{}",
                expected.0, expected.1, found.0, found.1
            ),
            Self::WrongDim { expected, found } => {
                write!(f, "expected a vector of dimension {expected}, found {found}")
            }
            Self::NotFinite { row, col } => {
                write!(f, "entry ({row},{col}) is -inf but must be finite")
            }
            Self::InvalidNumber(v) => write!(f, "{v} is not a finite semiring value"),
            Self::EmptySupport => write!(f, "vector has empty support"),
            Self::IndexNotInSupport { index } => {
                write!(f, "index {index} is not in the support of the vector")
            }
            Self::ProjectionUndefined => {
                write!(f, "projection undefined for equal diagonal entries")
            }
            Self::DegenerateProjection => {
                write!(f, "projection degenerates onto the triangle boundary")
            }
            Self::AmbiguousIntersection => {
                write!(f, "collinear overlapping segments: no unique intersection")
            }
            Self::InvalidBarycentric { phi } => write!(
                f,
                "invalid barycentric coordinates ({}, {}, {})",
                phi[0], phi[1], phi[2]
            ),
            Self::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
