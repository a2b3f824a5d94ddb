//! Seeded random instances for verification sweeps.
//!
//! Everything here is driven by an explicit RNG so sweeps are
//! reproducible from the seed they report.

use crate::commute::{classify, DiagonalCase, FiniteMat2};
use crate::matrix::TropVector;
use crate::semiring::TropScalar;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// The RNG used by all randomized verification, constructed from a
/// seed so every run is reproducible.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A finite 2x2 matrix with entries uniform in `[lo, hi]`.
pub fn mat2<R: Rng>(rng: &mut R, lo: f64, hi: f64) -> FiniteMat2 {
    FiniteMat2::new(
        rng.gen_range(lo..=hi),
        rng.gen_range(lo..=hi),
        rng.gen_range(lo..=hi),
        rng.gen_range(lo..=hi),
    )
    .expect("uniform draws from a finite range are finite")
}

/// Minimum diagonal gap enforced by [`mat2_in_case`] away from the
/// equal case, so sampled matrices never sit on the classification
/// boundary.
pub const CASE_MARGIN: f64 = 1e-6;

/// A random matrix in the requested diagonal case. The equal case
/// copies `a11` into `a22`; the others resample until the diagonal gap
/// clears [`CASE_MARGIN`] in the right direction.
pub fn mat2_in_case<R: Rng>(rng: &mut R, case: DiagonalCase, lo: f64, hi: f64) -> FiniteMat2 {
    loop {
        let a = mat2(rng, lo, hi);
        let a = match case {
            DiagonalCase::Equal => {
                FiniteMat2::new(a.a11(), a.a12(), a.a21(), a.a11()).expect("entries unchanged")
            }
            _ => a,
        };
        let gap = a.a11() - a.a22();
        let ok = match case {
            DiagonalCase::Above => gap >= CASE_MARGIN,
            DiagonalCase::Below => gap <= -CASE_MARGIN,
            DiagonalCase::Equal => true,
        };
        if ok {
            debug_assert_eq!(classify(&a, crate::semiring::DEFAULT_TOL), case);
            return a;
        }
    }
}

/// A matrix with integer entries uniform in `lo..=hi`, for exhaustive
/// grid oracles where exact arithmetic matters.
pub fn int_mat2<R: Rng>(rng: &mut R, lo: i64, hi: i64) -> FiniteMat2 {
    FiniteMat2::new(
        rng.gen_range(lo..=hi) as f64,
        rng.gen_range(lo..=hi) as f64,
        rng.gen_range(lo..=hi) as f64,
        rng.gen_range(lo..=hi) as f64,
    )
    .expect("small integers are finite")
}

/// An integer-entry matrix in the requested diagonal case.
pub fn int_mat2_in_case<R: Rng>(rng: &mut R, case: DiagonalCase, lo: i64, hi: i64) -> FiniteMat2 {
    loop {
        let a = int_mat2(rng, lo, hi);
        let a = match case {
            DiagonalCase::Equal => {
                FiniteMat2::new(a.a11(), a.a12(), a.a21(), a.a11()).expect("entries unchanged")
            }
            _ => a,
        };
        let gap = a.a11() - a.a22();
        let ok = match case {
            DiagonalCase::Above => gap > 0.0,
            DiagonalCase::Below => gap < 0.0,
            DiagonalCase::Equal => true,
        };
        if ok {
            return a;
        }
    }
}

/// A random coefficient: bottom with probability `bottom_prob`, else
/// uniform in `[lo, hi]`.
pub fn lambda<R: Rng>(rng: &mut R, lo: f64, hi: f64, bottom_prob: f64) -> TropScalar {
    if rng.gen_bool(bottom_prob) {
        TropScalar::Bottom
    } else {
        TropScalar::finite(rng.gen_range(lo..=hi))
    }
}

/// A random vector with independent [`lambda`] entries.
pub fn vector<R: Rng>(
    rng: &mut R,
    dim: usize,
    lo: f64,
    hi: f64,
    bottom_prob: f64,
) -> TropVector {
    TropVector::new((0..dim).map(|_| lambda(rng, lo, hi, bottom_prob)).collect())
}
