//! Max-plus (tropical) linear algebra for 2x2 commuting-matrix cones.
//!
//! Over the max-plus semiring — reals with `-inf`, where addition is
//! `max` and multiplication is `+` — the matrices `B` commuting with a
//! fixed finite 2x2 matrix `A` form a tropical cone. This crate
//! computes that cone explicitly:
//!
//! * [`semiring`] and [`matrix`] provide the scalar and dense
//!   matrix/vector arithmetic;
//! * [`commute`] encodes `A ⊗ B = B ⊗ A` as a two-sided system
//!   `C ⊗ x = D ⊗ x`, classifies `A` by its diagonal and produces the
//!   basis of scaled extremal solutions (four generators when the
//!   diagonal entries differ, six when they coincide), together with a
//!   runtime audit ([`commute::verify_basis`]);
//! * [`cone`] holds the generic span/extremality machinery the audit
//!   relies on (residuation, minimality, independence);
//! * [`bary`] projects the generators of an off-diagonal basis into a
//!   reference triangle and certifies that the three cevians of the
//!   picture meet in a single point;
//! * [`sample`] supplies seeded random instances for reproducible
//!   verification sweeps.
//!
//! The crate is `no_std` (with `alloc`), so the solver can be embedded
//! anywhere; parsing, file formats and the command-line front end live
//! in the companion `tropcomm` crate.
//!
//! ```
//! use tropcomm_core::{basis_commuting_cone, FiniteMat2, DiagonalCase, DEFAULT_TOL};
//!
//! let a = FiniteMat2::new(0.166, 0.861, -0.62, -0.76).unwrap();
//! let basis = basis_commuting_cone(&a, DEFAULT_TOL);
//! assert_eq!(basis.case(), DiagonalCase::Above);
//! assert_eq!(basis.len(), 4);
//! assert!((basis.alpha1().unwrap() + 0.14).abs() < 1e-12);
//! ```

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bary;
pub mod commute;
pub mod cone;
mod dd;
pub mod error;
pub mod matrix;
pub mod sample;
pub mod semiring;

pub use bary::{
    concurrency_check, project_extremals, segment_intersection, triangle_plot, BaryPoint,
    ConcurrencyReport, LineStyle, PlotAnchor, PlotSegment, TrianglePlot, BARY_SUM_TOL, TRIANGLE,
};
pub use commute::{
    basis_commuting_cone, build_system, classify, commutes, default_grid, enumerate_commuting,
    is_solution, verify_basis, verify_basis_of, CheckResult, ConeBasis, DiagonalCase, FiniteMat2,
    TwoSidedSystem, VerifyConfig, VerifyReport,
};
pub use cone::{
    in_span, is_extremal, is_independent, is_minimal, shift_set, span_lambda, span_projection,
    Support, VectorSet,
};
pub use error::Error;
pub use matrix::{TropMatrix, TropVector};
pub use semiring::{TropScalar, DEFAULT_TOL};
