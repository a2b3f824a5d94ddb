//! Max-plus scalars: the semiring (R ∪ {-inf}, max, +).
//!
//! Addition is `max`, multiplication is ordinary `+`. The additive
//! identity is `-inf` (written [`TropScalar::Bottom`]), the multiplicative
//! identity is `0`. Bottom is absorbing for multiplication.

use crate::error::Error;
use alloc::format;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul};
use core::str::FromStr;

/// Default comparison tolerance used throughout the crate.
pub const DEFAULT_TOL: f64 = 1e-9;

/// A max-plus scalar: either `-inf` or a finite real.
///
/// NaN and IEEE infinities never enter: [`TropScalar::finite`] rejects
/// them, so every stored float is finite and comparisons are total.
/// The variant order makes the derived `PartialOrd` place `Bottom`
/// below every finite value.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub enum TropScalar {
    /// The additive identity `-inf`, absorbing for multiplication.
    Bottom,
    /// A finite real value.
    Finite(f64),
}

impl TropScalar {
    /// Wraps a finite float.
    ///
    /// # Panics
    ///
    /// Panics if `v` is NaN or infinite; use [`TropScalar::try_finite`]
    /// to handle untrusted input.
    pub fn finite(v: f64) -> Self {
        match Self::try_finite(v) {
            Ok(s) => s,
            Err(_) => panic!("TropScalar::finite({v}): value must be a finite float"),
        }
    }

    /// Wraps a float, rejecting NaN and infinities.
    pub fn try_finite(v: f64) -> Result<Self, Error> {
        if v.is_finite() {
            Ok(Self::Finite(v))
        } else {
            Err(Error::InvalidNumber(v))
        }
    }

    /// True for `Bottom`.
    pub fn is_bottom(self) -> bool {
        matches!(self, Self::Bottom)
    }

    /// True for a finite value.
    pub fn is_finite(self) -> bool {
        matches!(self, Self::Finite(_))
    }

    /// The finite value, if any.
    pub fn value(self) -> Option<f64> {
        match self {
            Self::Bottom => None,
            Self::Finite(v) => Some(v),
        }
    }

    /// Tropical addition: the maximum. `Bottom` is the identity.
    pub fn oplus(self, rhs: Self) -> Self {
        match (self, rhs) {
            (Self::Bottom, x) | (x, Self::Bottom) => x,
            (Self::Finite(a), Self::Finite(b)) => Self::Finite(a.max(b)),
        }
    }

    /// Tropical multiplication: ordinary addition. `Bottom` absorbs.
    pub fn otimes(self, rhs: Self) -> Self {
        match (self, rhs) {
            (Self::Bottom, _) | (_, Self::Bottom) => Self::Bottom,
            (Self::Finite(a), Self::Finite(b)) => Self::finite(a + b),
        }
    }

    /// Equality up to `tol` on finite values; `Bottom` only equals
    /// `Bottom`, regardless of tolerance.
    pub fn approx_eq(self, rhs: Self, tol: f64) -> bool {
        debug_assert!(tol >= 0.0, "tolerance must be nonnegative");
        match (self, rhs) {
            (Self::Bottom, Self::Bottom) => true,
            (Self::Finite(a), Self::Finite(b)) => (a - b).abs() <= tol,
            _ => false,
        }
    }

    /// Total order: `Bottom` below everything, finite values by `<=`.
    pub fn total_cmp(self, rhs: Self) -> Ordering {
        match (self, rhs) {
            (Self::Bottom, Self::Bottom) => Ordering::Equal,
            (Self::Bottom, _) => Ordering::Less,
            (_, Self::Bottom) => Ordering::Greater,
            (Self::Finite(a), Self::Finite(b)) => a.total_cmp(&b),
        }
    }
}

impl Add for TropScalar {
    type Output = Self;

    /// `+` is tropical addition (max).
    fn add(self, rhs: Self) -> Self {
        self.oplus(rhs)
    }
}

impl Mul for TropScalar {
    type Output = Self;

    /// `*` is tropical multiplication (ordinary addition).
    fn mul(self, rhs: Self) -> Self {
        self.otimes(rhs)
    }
}

impl fmt::Display for TropScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Bottom => write!(f, "-inf"),
            Self::Finite(v) => write!(f, "{v}"),
        }
    }
}

impl FromStr for TropScalar {
    type Err = Error;

    /// Accepts `-inf` (case-insensitive) for `Bottom` and any finite
    /// float literal otherwise.
    fn from_str(s: &str) -> Result<Self, Error> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("-inf") {
            return Ok(Self::Bottom);
        }
        let v: f64 = t
            .parse()
            .map_err(|_| Error::Parse(format!("invalid scalar {t:?}")))?;
        Self::try_finite(v).map_err(|_| Error::Parse(format!("non-finite scalar {t:?}")))
    }
}
