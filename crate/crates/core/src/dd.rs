//! Double-double ("compensated") arithmetic: a value is an unevaluated
//! sum `hi + lo` of two floats, giving roughly 32 significant digits.
//!
//! The concurrency measurement intersects pairs of nearly parallel
//! segments, where plain `f64` cross products lose up to eight digits
//! to cancellation. Carrying the segment arithmetic in double-double
//! keeps the measured spread at the scale of the actual geometry
//! instead of the rounding noise. Only the operations that calculation
//! needs are implemented.

use libm::fma;

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Dd {
    hi: f64,
    lo: f64,
}

/// Knuth's TwoSum: `a + b = s + e` exactly, no ordering assumed.
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let e = (a - (s - bb)) + (b - bb);
    (s, e)
}

/// Fast renormalization, valid when `|a| >= |b|` or `a == 0`.
fn quick_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let e = b - (s - a);
    (s, e)
}

/// `a * b = p + e` exactly, via fused multiply-add.
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let e = fma(a, b, -p);
    (p, e)
}

impl Dd {
    pub(crate) const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };

    pub(crate) fn from_f64(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    /// The exact product of two plain floats.
    pub(crate) fn prod(a: f64, b: f64) -> Self {
        let (hi, lo) = two_prod(a, b);
        Dd { hi, lo }
    }

    /// Rounds back to the nearest plain float.
    pub(crate) fn value(self) -> f64 {
        self.hi + self.lo
    }

    pub(crate) fn neg(self) -> Self {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }

    pub(crate) fn add(self, rhs: Self) -> Self {
        let (s, e) = two_sum(self.hi, rhs.hi);
        let e = e + self.lo + rhs.lo;
        let (hi, lo) = quick_sum(s, e);
        Dd { hi, lo }
    }

    pub(crate) fn sub(self, rhs: Self) -> Self {
        self.add(rhs.neg())
    }

    pub(crate) fn mul(self, rhs: Self) -> Self {
        let (p, e) = two_prod(self.hi, rhs.hi);
        let e = e + self.hi * rhs.lo + self.lo * rhs.hi;
        let (hi, lo) = quick_sum(p, e);
        Dd { hi, lo }
    }

    pub(crate) fn div(self, rhs: Self) -> Self {
        let q1 = self.hi / rhs.hi;
        let rem = self.sub(rhs.mul(Dd::from_f64(q1)));
        let q2 = rem.value() / rhs.hi;
        let (hi, lo) = quick_sum(q1, q2);
        Dd { hi, lo }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn products_keep_the_low_bits() {
        // (1e8+1)(1e8-1) = 1e16 - 1, whose low bit plain f64 drops
        let exact = Dd::prod(1e8 + 1.0, 1e8 - 1.0).sub(Dd::prod(1e8, 1e8));
        assert_eq!(exact.value(), -1.0);
    }

    #[test]
    fn sums_are_error_free() {
        let big = Dd::from_f64(1e16).add(Dd::from_f64(1.0));
        assert_eq!(big.sub(Dd::from_f64(1e16)).value(), 1.0);
    }

    #[test]
    fn division_round_trips() {
        let third = Dd::from_f64(1.0).div(Dd::from_f64(3.0));
        let back = third.mul(Dd::from_f64(3.0)).sub(Dd::from_f64(1.0));
        assert!(back.value().abs() < 1e-30);
    }

    #[test]
    fn cancelling_cross_product_stays_exact() {
        // a*d - b*c = -1 here, far below the rounding of the ~1e16
        // products, so the naive evaluation returns 0
        let (a, d) = (1e8 + 1.0, 1e8 - 1.0);
        let (b, c) = (1e8, 1e8);
        assert_eq!(a * d - b * c, 0.0);
        let cross = Dd::prod(a, d).sub(Dd::prod(b, c));
        assert_eq!(cross.value(), -1.0);
    }
}
