//! The commuting cone of a finite 2x2 max-plus matrix.
//!
//! For a finite matrix `A`, the matrices `B` with `A ⊗ B = B ⊗ A` form
//! a tropical cone in the four entries `(b11, b12, b21, b22)`. This
//! module encodes the commutation equations as a two-sided linear
//! system `C ⊗ x = D ⊗ x`, classifies `A` by its diagonal, and builds
//! an explicit generating set of scaled extremals: four vectors when
//! the diagonal entries differ, six when they coincide.
//!
//! [`verify_basis`] re-derives every claimed property of the basis at
//! runtime — membership, independence, extremality, span coverage on an
//! integer grid, and closure under random combinations — so callers can
//! audit a basis instead of trusting it.

use crate::cone::{in_span, is_extremal, VectorSet};
use crate::error::Error;
use crate::matrix::{TropMatrix, TropVector};
use crate::semiring::TropScalar;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

// ---------------------------------------------------------------------------
// Finite 2x2 matrices and their diagonal classification
// ---------------------------------------------------------------------------

/// A 2x2 max-plus matrix with all entries finite, the domain of the
/// basis construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FiniteMat2 {
    a11: f64,
    a12: f64,
    a21: f64,
    a22: f64,
}

impl FiniteMat2 {
    /// Builds from raw entries, rejecting NaN and infinities.
    pub fn new(a11: f64, a12: f64, a21: f64, a22: f64) -> Result<Self, Error> {
        for v in [a11, a12, a21, a22] {
            if !v.is_finite() {
                return Err(Error::InvalidNumber(v));
            }
        }
        Ok(Self { a11, a12, a21, a22 })
    }

    /// Converts a general matrix, requiring shape 2x2 and no bottom
    /// entries.
    pub fn from_matrix(m: &TropMatrix) -> Result<Self, Error> {
        if m.shape() != (2, 2) {
            return Err(Error::WrongShape {
                expected: (2, 2),
                found: m.shape(),
            });
        }
        let mut e = [0.0f64; 4];
        for i in 0..2 {
            for j in 0..2 {
                e[i * 2 + j] = m
                    .get(i, j)
                    .value()
                    .ok_or(Error::NotFinite { row: i, col: j })?;
            }
        }
        Ok(Self {
            a11: e[0],
            a12: e[1],
            a21: e[2],
            a22: e[3],
        })
    }

    pub fn a11(&self) -> f64 {
        self.a11
    }

    pub fn a12(&self) -> f64 {
        self.a12
    }

    pub fn a21(&self) -> f64 {
        self.a21
    }

    pub fn a22(&self) -> f64 {
        self.a22
    }

    pub fn to_matrix(&self) -> TropMatrix {
        TropMatrix::new(
            2,
            2,
            alloc::vec![
                TropScalar::finite(self.a11),
                TropScalar::finite(self.a12),
                TropScalar::finite(self.a21),
                TropScalar::finite(self.a22),
            ],
        )
        .expect("2x2 with 4 entries")
    }
}

impl fmt::Display for FiniteMat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}; {} {}", self.a11, self.a12, self.a21, self.a22)
    }
}

/// Position of `a11` relative to `a22`, which determines the shape of
/// the commuting cone's basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiagonalCase {
    /// `a11 > a22`: four extremals, normalized at coordinate `b11`.
    Above,
    /// `a11 < a22`: the mirror image, four extremals.
    Below,
    /// `a11 = a22` (within tolerance): six extremals.
    Equal,
}

impl DiagonalCase {
    /// Stable machine-readable tag used in reports.
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Above => "above-diagonal",
            Self::Below => "below-diagonal",
            Self::Equal => "equal-diagonal",
        }
    }
}

impl fmt::Display for DiagonalCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Compares the diagonal entries of `A` up to `tol`.
pub fn classify(a: &FiniteMat2, tol: f64) -> DiagonalCase {
    let gap = a.a11 - a.a22;
    if gap.abs() <= tol {
        DiagonalCase::Equal
    } else if gap > 0.0 {
        DiagonalCase::Above
    } else {
        DiagonalCase::Below
    }
}

// ---------------------------------------------------------------------------
// The two-sided system C ⊗ x = D ⊗ x
// ---------------------------------------------------------------------------

/// The 4x4 two-sided system whose solutions `x = (b11, b12, b21, b22)`
/// are exactly the matrices commuting with `A`: row `i` of `C ⊗ x`
/// is entry `i` of `A ⊗ B` (row-major) and row `i` of `D ⊗ x` is the
/// same entry of `B ⊗ A`.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoSidedSystem {
    lhs: TropMatrix,
    rhs: TropMatrix,
}

impl TwoSidedSystem {
    pub fn lhs(&self) -> &TropMatrix {
        &self.lhs
    }

    pub fn rhs(&self) -> &TropMatrix {
        &self.rhs
    }

    /// Evaluates both sides on `x`; errors unless `x` has dimension 4.
    pub fn eval(&self, x: &TropVector) -> Result<(TropVector, TropVector), Error> {
        if x.dim() != 4 {
            return Err(Error::WrongDim {
                expected: 4,
                found: x.dim(),
            });
        }
        let l = self.lhs.otimes_vec(x).expect("4x4 times dim-4");
        let r = self.rhs.otimes_vec(x).expect("4x4 times dim-4");
        Ok((l, r))
    }
}

/// Encodes `A ⊗ B = B ⊗ A` as a two-sided system over
/// `x = (b11, b12, b21, b22)`.
pub fn build_system(a: &FiniteMat2) -> TwoSidedSystem {
    let b = TropScalar::Bottom;
    let (a11, a12) = (TropScalar::finite(a.a11), TropScalar::finite(a.a12));
    let (a21, a22) = (TropScalar::finite(a.a21), TropScalar::finite(a.a22));
    let lhs = TropMatrix::new(
        4,
        4,
        alloc::vec![
            a11, b, a12, b, //
            b, a11, b, a12, //
            a21, b, a22, b, //
            b, a21, b, a22,
        ],
    )
    .expect("4x4 with 16 entries");
    let rhs = TropMatrix::new(
        4,
        4,
        alloc::vec![
            a11, a21, b, b, //
            a12, a22, b, b, //
            b, b, a11, a21, //
            b, b, a12, a22,
        ],
    )
    .expect("4x4 with 16 entries");
    TwoSidedSystem { lhs, rhs }
}

/// True when `A ⊗ B` and `B ⊗ A` agree entrywise up to `tol`. Both
/// matrices must be square and equally shaped.
pub fn commutes(a: &TropMatrix, b: &TropMatrix, tol: f64) -> Result<bool, Error> {
    if a.shape() != b.shape() || a.rows() != a.cols() {
        return Err(Error::ShapeMismatch {
            left: a.shape(),
            right: b.shape(),
        });
    }
    let ab = a.otimes(b)?;
    let ba = b.otimes(a)?;
    Ok(ab.approx_eq(&ba, tol))
}

/// True when `x` solves the two-sided system up to `tol`.
pub fn is_solution(x: &TropVector, sys: &TwoSidedSystem, tol: f64) -> Result<bool, Error> {
    let (l, r) = sys.eval(x)?;
    Ok(l.approx_eq(&r, tol))
}

// ---------------------------------------------------------------------------
// The basis of the commuting cone
// ---------------------------------------------------------------------------

/// The scaled extremal generators of the cone of matrices commuting
/// with a fixed finite `A`, plus the classification that produced them.
#[derive(Debug, Clone, PartialEq)]
pub struct ConeBasis {
    case: DiagonalCase,
    vectors: VectorSet,
    alpha1: Option<f64>,
    alpha2: Option<f64>,
    near_degenerate: bool,
}

impl ConeBasis {
    pub fn case(&self) -> DiagonalCase {
        self.case
    }

    /// The generators in scaled form (first finite coordinate `0`).
    pub fn vectors(&self) -> &VectorSet {
        &self.vectors
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// Offset of the second generator's `b12` entry; `None` in the
    /// equal-diagonal case.
    pub fn alpha1(&self) -> Option<f64> {
        self.alpha1
    }

    /// Offset of the third generator's `b21` entry; `None` in the
    /// equal-diagonal case.
    pub fn alpha2(&self) -> Option<f64> {
        self.alpha2
    }

    /// True when the diagonal entries differ but by no more than the
    /// classification tolerance, so the equal-diagonal basis was used.
    pub fn near_degenerate(&self) -> bool {
        self.near_degenerate
    }

    /// Copy of this basis with the generator set replaced, keeping the
    /// case tag and offsets. Lets callers hand [`verify_basis_of`] an
    /// altered set — e.g. a deliberately truncated one — as a negative
    /// control.
    pub fn with_vectors(&self, vectors: VectorSet) -> Self {
        Self {
            vectors,
            ..self.clone()
        }
    }
}

fn vec4(e0: TropScalar, e1: TropScalar, e2: TropScalar, e3: TropScalar) -> TropVector {
    TropVector::new(alloc::vec![e0, e1, e2, e3])
}

/// Builds the scaled extremal basis of the commuting cone of `A`.
///
/// With `d = a11 - a22` and writing `fin` for a finite entry:
///
/// * `d > tol` (above): `alpha1 = min(a12-a11, a22-a21)`,
///   `alpha2 = min(a21-a11, a22-a12)`, and the four generators are
///   `(0,-inf,-inf,0)`, `(0,alpha1,-inf,0)`, `(0,-inf,alpha2,0)`,
///   `(0, a12-a11, a21-a11, -inf)`.
/// * `d < -tol` (below): the mirror image with `alpha1 =
///   min(a12-a22, a11-a21)`, `alpha2 = min(a21-a22, a11-a12)` and
///   fourth generator `(-inf, 0, a21-a12, a22-a12)`.
/// * `|d| <= tol` (equal): six generators and no alphas.
pub fn basis_commuting_cone(a: &FiniteMat2, tol: f64) -> ConeBasis {
    let case = classify(a, tol);
    let near_degenerate = case == DiagonalCase::Equal && a.a11 != a.a22;
    let bot = TropScalar::Bottom;
    let zero = TropScalar::finite(0.0);
    let fin = TropScalar::finite;

    let (vectors, alpha1, alpha2) = match case {
        DiagonalCase::Above => {
            let alpha1 = (a.a12 - a.a11).min(a.a22 - a.a21);
            let alpha2 = (a.a21 - a.a11).min(a.a22 - a.a12);
            let vs = alloc::vec![
                vec4(zero, bot, bot, zero),
                vec4(zero, fin(alpha1), bot, zero),
                vec4(zero, bot, fin(alpha2), zero),
                vec4(zero, fin(a.a12 - a.a11), fin(a.a21 - a.a11), bot),
            ];
            (vs, Some(alpha1), Some(alpha2))
        }
        DiagonalCase::Below => {
            let alpha1 = (a.a12 - a.a22).min(a.a11 - a.a21);
            let alpha2 = (a.a21 - a.a22).min(a.a11 - a.a12);
            let vs = alloc::vec![
                vec4(zero, bot, bot, zero),
                vec4(zero, fin(alpha1), bot, zero),
                vec4(zero, bot, fin(alpha2), zero),
                vec4(bot, zero, fin(a.a21 - a.a12), fin(a.a22 - a.a12)),
            ];
            (vs, Some(alpha1), Some(alpha2))
        }
        DiagonalCase::Equal => {
            let vs = alloc::vec![
                vec4(zero, bot, bot, zero),
                vec4(zero, fin(a.a11 - a.a21), bot, zero),
                vec4(zero, bot, fin(a.a11 - a.a12), zero),
                vec4(zero, fin(a.a12 - a.a11), fin(a.a21 - a.a11), bot),
                vec4(bot, zero, fin(a.a21 - a.a12), fin(a.a22 - a.a12)),
                vec4(bot, zero, fin(a.a21 - a.a12), bot),
            ];
            (vs, None, None)
        }
    };

    ConeBasis {
        case,
        vectors: VectorSet::new(4, vectors).expect("generators have dimension 4"),
        alpha1,
        alpha2,
        near_degenerate,
    }
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration on a grid
// ---------------------------------------------------------------------------

/// Bottom followed by the integers `-radius..=radius`, the grid used
/// for exhaustive solution enumeration.
pub fn default_grid(radius: i64) -> Vec<TropScalar> {
    let mut grid = Vec::with_capacity((2 * radius + 2) as usize);
    grid.push(TropScalar::Bottom);
    for v in -radius..=radius {
        grid.push(TropScalar::finite(v as f64));
    }
    grid
}

/// Every `x` over `grid^4` solving the two-sided system of `A`, in
/// lexicographic grid order. Includes the all-bottom solution whenever
/// bottom is in the grid.
pub fn enumerate_commuting(a: &FiniteMat2, grid: &[TropScalar], tol: f64) -> VectorSet {
    let sys = build_system(a);
    let mut out = VectorSet::empty(4);
    for &x0 in grid {
        for &x1 in grid {
            for &x2 in grid {
                for &x3 in grid {
                    let x = vec4(x0, x1, x2, x3);
                    if is_solution(&x, &sys, tol).expect("dimension 4") {
                        out.push(x).expect("dimension 4");
                    }
                }
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Self-verification
// ---------------------------------------------------------------------------

/// Parameters for [`verify_basis`]: comparison tolerance, RNG seed,
/// the integer grid radius for exhaustive enumeration, and the shape
/// of the random-combination probe.
#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub tol: f64,
    pub seed: u64,
    pub grid_radius: i64,
    /// Number of random tropical combinations checked against the
    /// system.
    pub combo_trials: usize,
    /// Range for finite random coefficients.
    pub lambda_lo: f64,
    pub lambda_hi: f64,
    /// Probability that a random coefficient is bottom.
    pub bottom_prob: f64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            tol: crate::semiring::DEFAULT_TOL,
            seed: 0,
            grid_radius: 5,
            combo_trials: 200,
            lambda_lo: -5.0,
            lambda_hi: 5.0,
            bottom_prob: 0.3,
        }
    }
}

/// Outcome of one verification check; `witness` carries the vector
/// that broke a failing check.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckResult {
    pub name: &'static str,
    pub pass: bool,
    pub witness: Option<TropVector>,
}

impl CheckResult {
    fn pass(name: &'static str) -> Self {
        Self {
            name,
            pass: true,
            witness: None,
        }
    }

    fn fail(name: &'static str, witness: TropVector) -> Self {
        Self {
            name,
            pass: false,
            witness: Some(witness),
        }
    }
}

/// A full audit of one basis: the checks run, any warnings, and the
/// seed that reproduces the random parts.
#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub seed: u64,
    pub tol: f64,
    pub basis: ConeBasis,
    pub checks: Vec<CheckResult>,
    pub warnings: Vec<String>,
}

impl VerifyReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

/// Builds the basis for `A` and audits it; see [`verify_basis_of`].
pub fn verify_basis(a: &FiniteMat2, cfg: &VerifyConfig) -> VerifyReport {
    let basis = basis_commuting_cone(a, cfg.tol);
    verify_basis_of(a, &basis, cfg)
}

/// Audits an explicitly supplied basis against `A`. Checks, in order:
///
/// 1. `expected-size` — four generators off the diagonal case, six on it;
/// 2. `members-solve-system` — every generator commutes with `A`;
/// 3. `independent` — no generator lies in the span of the others;
/// 4. `members-extremal` — every generator is extremal in the set;
/// 5. `grid-solutions-in-span` — every solution found by exhaustive
///    enumeration over the integer grid lies in the span;
/// 6. `random-combinations-solve` — seeded random combinations of the
///    generators solve the system.
///
/// Taking the basis as an argument lets negative controls (e.g. a
/// deliberately truncated set) demonstrate that the audit has teeth.
pub fn verify_basis_of(a: &FiniteMat2, basis: &ConeBasis, cfg: &VerifyConfig) -> VerifyReport {
    let sys = build_system(a);
    let set = basis.vectors();
    let mut checks = Vec::new();
    let mut warnings = Vec::new();

    if basis.near_degenerate() {
        warnings.push(String::from(
            "diagonal entries differ by no more than the tolerance; \
             the equal-diagonal basis was used",
        ));
    }

    let expected = match basis.case() {
        DiagonalCase::Equal => 6,
        _ => 4,
    };
    checks.push(if set.len() == expected {
        CheckResult::pass("expected-size")
    } else {
        CheckResult {
            name: "expected-size",
            pass: false,
            witness: None,
        }
    });

    let bad_member = set
        .iter()
        .find(|v| !is_solution(v, &sys, cfg.tol).expect("dimension 4"));
    checks.push(match bad_member {
        None => CheckResult::pass("members-solve-system"),
        Some(v) => CheckResult::fail("members-solve-system", v.clone()),
    });

    let redundant = (0..set.len()).find(|&i| in_span(set.get(i), &set.without(i), cfg.tol));
    checks.push(match redundant {
        None => CheckResult::pass("independent"),
        Some(i) => CheckResult::fail("independent", set.get(i).clone()),
    });

    let non_extremal = set
        .iter()
        .find(|v| !is_extremal(v, set, cfg.tol).unwrap_or(false));
    checks.push(match non_extremal {
        None => CheckResult::pass("members-extremal"),
        Some(v) => CheckResult::fail("members-extremal", v.clone()),
    });

    let grid = default_grid(cfg.grid_radius);
    let enumerated = enumerate_commuting(a, &grid, cfg.tol);
    let missed = enumerated
        .iter()
        .find(|x| !in_span(x, set, cfg.tol));
    checks.push(match missed {
        None => CheckResult::pass("grid-solutions-in-span"),
        Some(x) => CheckResult::fail("grid-solutions-in-span", x.clone()),
    });

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut combo_witness = None;
    for _ in 0..cfg.combo_trials {
        let mut combo = TropVector::bottom(4);
        for v in set.iter() {
            let lambda = if rng.gen_bool(cfg.bottom_prob) {
                TropScalar::Bottom
            } else {
                TropScalar::finite(rng.gen_range(cfg.lambda_lo..=cfg.lambda_hi))
            };
            combo = combo.oplus(&v.scale_by(lambda)).expect("dimension 4");
        }
        if !is_solution(&combo, &sys, cfg.tol).expect("dimension 4") {
            combo_witness = Some(combo);
            break;
        }
    }
    checks.push(match combo_witness {
        None => CheckResult::pass("random-combinations-solve"),
        Some(x) => CheckResult::fail("random-combinations-solve", x),
    });

    VerifyReport {
        seed: cfg.seed,
        tol: cfg.tol,
        basis: basis.clone(),
        checks,
        warnings,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semiring::DEFAULT_TOL;
    use proptest::prelude::*;

    fn m(s: &str) -> TropMatrix {
        s.parse().unwrap()
    }

    fn v(s: &str) -> TropVector {
        s.parse().unwrap()
    }

    fn fm(s: &str) -> FiniteMat2 {
        FiniteMat2::from_matrix(&m(s)).unwrap()
    }

    // running example: diagonal strictly above, alpha1 = -0.14,
    // alpha2 = -1.621
    fn eg() -> FiniteMat2 {
        fm("0.166 0.861; -0.62 -0.76")
    }

    #[test]
    fn finite_mat2_rejects_bottom_and_wrong_shape() {
        assert_eq!(
            FiniteMat2::from_matrix(&m("0 -inf; 0 0")).unwrap_err(),
            Error::NotFinite { row: 0, col: 1 }
        );
        assert!(matches!(
            FiniteMat2::from_matrix(&m("0 0 0; 0 0 0")).unwrap_err(),
            Error::WrongShape { .. }
        ));
        assert!(FiniteMat2::new(0.0, f64::NAN, 0.0, 0.0).is_err());
        let a = eg();
        assert_eq!(FiniteMat2::from_matrix(&a.to_matrix()).unwrap(), a);
    }

    #[test]
    fn system_has_the_documented_pattern() {
        let sys = build_system(&eg());
        let c = sys.lhs();
        let d = sys.rhs();
        // first row of C: (a11, -inf, a12, -inf)
        assert_eq!(c.get(0, 0), TropScalar::finite(0.166));
        assert!(c.get(0, 1).is_bottom());
        assert_eq!(c.get(0, 2), TropScalar::finite(0.861));
        assert!(c.get(0, 3).is_bottom());
        // first row of D: (a11, a21, -inf, -inf)
        assert_eq!(d.get(0, 0), TropScalar::finite(0.166));
        assert_eq!(d.get(0, 1), TropScalar::finite(-0.62));
        assert!(d.get(0, 2).is_bottom());
        assert!(d.get(0, 3).is_bottom());
        // each row carries exactly two finite entries
        for i in 0..4 {
            let finite = |mtx: &TropMatrix| {
                (0..4).filter(|&j| mtx.get(i, j).is_finite()).count()
            };
            assert_eq!(finite(c), 2);
            assert_eq!(finite(d), 2);
        }
    }

    #[test]
    fn commutes_matches_the_product_definition() {
        let a = eg().to_matrix();
        assert!(commutes(&a, &TropMatrix::identity(2), DEFAULT_TOL).unwrap());
        assert!(commutes(&a, &TropMatrix::bottom(2, 2), DEFAULT_TOL).unwrap());
        assert!(commutes(&a, &a, DEFAULT_TOL).unwrap());
        // the fourth generator of the running example
        let b4 = v("0, 0.695, -0.786, -inf").to_mat2().unwrap();
        assert!(commutes(&a, &b4, DEFAULT_TOL).unwrap());
        // a generic matrix does not commute
        let b = m("0 1; 1 0");
        assert!(!commutes(&a, &b, DEFAULT_TOL).unwrap());
        assert!(commutes(&a, &m("0 0 0; 0 0 0"), DEFAULT_TOL).is_err());
    }

    #[test]
    fn is_solution_agrees_with_commutes() {
        let a = fm("0 1; 2 -5");
        let sys = build_system(&a);
        // exceeding alpha1 = min(1-0, -5-2) = -7 in coordinate b12
        // breaks commutation
        assert!(!is_solution(&v("0, 100, -inf, 0"), &sys, DEFAULT_TOL).unwrap());
        assert!(is_solution(&v("0, -7, -inf, 0"), &sys, DEFAULT_TOL).unwrap());
        assert!(is_solution(&v("-inf, -inf, -inf, -inf"), &sys, DEFAULT_TOL).unwrap());
        assert!(is_solution(&v("0, 1"), &sys, DEFAULT_TOL).is_err());
    }

    #[test]
    fn classify_uses_the_tolerance() {
        assert_eq!(classify(&fm("1 2; 3 1"), DEFAULT_TOL), DiagonalCase::Equal);
        assert_eq!(classify(&fm("-1 2; 3 0"), DEFAULT_TOL), DiagonalCase::Below);
        assert_eq!(classify(&eg(), DEFAULT_TOL), DiagonalCase::Above);
        // a gap below tol counts as equal and flags near-degeneracy
        let nearly = FiniteMat2::new(1e-12, 1.0, 1.0, 0.0).unwrap();
        assert_eq!(classify(&nearly, DEFAULT_TOL), DiagonalCase::Equal);
        let basis = basis_commuting_cone(&nearly, DEFAULT_TOL);
        assert!(basis.near_degenerate());
        assert_eq!(basis.len(), 6);
    }

    #[test]
    fn above_basis_matches_hand_computed_values() {
        let basis = basis_commuting_cone(&eg(), DEFAULT_TOL);
        assert_eq!(basis.case(), DiagonalCase::Above);
        assert_eq!(basis.len(), 4);
        assert!(!basis.near_degenerate());
        // alpha1 = min(0.861-0.166, -0.76+0.62) = -0.14
        // alpha2 = min(-0.62-0.166, -0.76-0.861) = -1.621
        assert!((basis.alpha1().unwrap() + 0.14).abs() < 1e-12);
        assert!((basis.alpha2().unwrap() + 1.621).abs() < 1e-12);
        let expect = [
            "0, -inf, -inf, 0",
            "0, -0.14, -inf, 0",
            "0, -inf, -1.621, 0",
            "0, 0.695, -0.786, -inf",
        ];
        for (got, want) in basis.vectors().iter().zip(expect) {
            assert!(got.approx_eq(&v(want), 1e-9), "{got} != {want}");
        }
    }

    #[test]
    fn below_basis_mirrors_the_above_case() {
        // transpose of the running example has its diagonal below
        let a = fm("-0.76 -0.62; 0.861 0.166");
        let basis = basis_commuting_cone(&a, DEFAULT_TOL);
        assert_eq!(basis.case(), DiagonalCase::Below);
        assert_eq!(basis.len(), 4);
        // alpha1 = min(a12-a22, a11-a21) = min(-0.786, -1.621) = -1.621
        // alpha2 = min(a21-a22, a11-a12) = min(0.695, -0.14) = -0.14
        assert!((basis.alpha1().unwrap() + 1.621).abs() < 1e-12);
        assert!((basis.alpha2().unwrap() + 0.14).abs() < 1e-12);
        // fourth generator normalizes at b12 and keeps b11 bottom
        let b4 = basis.vectors().get(3);
        assert!(b4.get(0).is_bottom());
        assert_eq!(b4.get(1), TropScalar::finite(0.0));
        // every generator solves the system
        let sys = build_system(&a);
        for w in basis.vectors().iter() {
            assert!(is_solution(w, &sys, DEFAULT_TOL).unwrap());
        }
    }

    #[test]
    fn equal_basis_lists_six_scaled_generators() {
        let basis = basis_commuting_cone(&fm("1 0; 0 1"), DEFAULT_TOL);
        assert_eq!(basis.case(), DiagonalCase::Equal);
        assert_eq!(basis.alpha1(), None);
        let expect = [
            "0, -inf, -inf, 0",
            "0, 1, -inf, 0",
            "0, -inf, 1, 0",
            "1, 0, 0, -inf",
            "-inf, 0, 0, 1",
            "-inf, 0, 0, -inf",
        ];
        assert_eq!(basis.len(), expect.len());
        for (got, want) in basis.vectors().iter().zip(expect) {
            let want = v(want).scaled().unwrap();
            assert!(got.approx_eq(&want, 1e-9), "{got} != {want}");
        }
    }

    #[test]
    fn commuting_but_unreachable_vector_needs_the_six_generator_set() {
        // equal-diagonal matrix whose diagonal dominates: 2*a11 > a12+a21
        let a = fm("0 -2; -3 0");
        let sys = build_system(&a);
        let b = v("0, 3, -3, 0");
        assert!(is_solution(&b, &sys, DEFAULT_TOL).unwrap());

        // applying the off-diagonal four-generator recipe anyway misses b
        let primed = VectorSet::new(
            4,
            alloc::vec![
                v("0, -inf, -inf, 0"),
                v("0, -2, -inf, 0"),
                v("0, -inf, -3, 0"),
                v("0, -2, -3, -inf"),
            ],
        )
        .unwrap();
        assert!(!in_span(&b, &primed, DEFAULT_TOL));

        // the actual six-generator basis reaches it
        let basis = basis_commuting_cone(&a, DEFAULT_TOL);
        assert!(in_span(&b, basis.vectors(), DEFAULT_TOL));
    }

    #[test]
    fn enumeration_contains_the_trivial_solutions() {
        let grid = [TropScalar::Bottom, TropScalar::finite(0.0)];
        let sols = enumerate_commuting(&eg(), &grid, DEFAULT_TOL);
        let all_bottom = v("-inf, -inf, -inf, -inf");
        let beta1 = v("0, -inf, -inf, 0");
        assert!(sols.iter().any(|x| x == &all_bottom));
        assert!(sols.iter().any(|x| x == &beta1));
        // everything reported is a solution
        let sys = build_system(&eg());
        for x in sols.iter() {
            assert!(is_solution(x, &sys, DEFAULT_TOL).unwrap());
        }
    }

    #[test]
    fn verify_passes_on_generated_bases() {
        let cfg = VerifyConfig {
            grid_radius: 3,
            ..VerifyConfig::default()
        };
        for a in [eg(), fm("0 -1; -1 0"), fm("-1 2; 3 0"), fm("0 -2; -3 0")] {
            let report = verify_basis(&a, &cfg);
            assert!(
                report.all_pass(),
                "unexpected failure on {a}: {:?}",
                report.failures().collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn verify_flags_a_truncated_basis() {
        let a = fm("1 0; -1 -1");
        let full = basis_commuting_cone(&a, DEFAULT_TOL);
        let truncated = full.with_vectors(full.vectors().without(full.len() - 1));
        let cfg = VerifyConfig {
            grid_radius: 3,
            ..VerifyConfig::default()
        };
        let report = verify_basis_of(&a, &truncated, &cfg);
        assert!(!report.all_pass());
        let failed: Vec<&str> = report.failures().map(|c| c.name).collect();
        assert!(failed.contains(&"expected-size"));
        assert!(failed.contains(&"grid-solutions-in-span"));
        // the missed solution really does commute and really is outside
        let witness = report
            .failures()
            .find(|c| c.name == "grid-solutions-in-span")
            .and_then(|c| c.witness.clone())
            .unwrap();
        let sys = build_system(&a);
        assert!(is_solution(&witness, &sys, DEFAULT_TOL).unwrap());
        assert!(!in_span(&witness, truncated.vectors(), DEFAULT_TOL));
    }

    fn entry() -> impl Strategy<Value = f64> {
        -50.0..50.0f64
    }

    fn finite_mat() -> impl Strategy<Value = FiniteMat2> {
        (entry(), entry(), entry(), entry())
            .prop_map(|(a, b, c, d)| FiniteMat2::new(a, b, c, d).unwrap())
    }

    fn trop_b() -> impl Strategy<Value = TropMatrix> {
        let scalar = prop_oneof![
            1 => Just(TropScalar::Bottom),
            3 => (-50.0..50.0f64).prop_map(TropScalar::finite),
        ];
        proptest::collection::vec(scalar, 4)
            .prop_map(|e| TropMatrix::new(2, 2, e).unwrap())
    }

    proptest! {
        #[test]
        fn system_solutions_are_exactly_commuting_matrices(
            a in finite_mat(), b in trop_b()
        ) {
            // the two routes perform the same max-plus arithmetic, so
            // they agree for every tolerance — here the default
            let direct = commutes(&a.to_matrix(), &b, DEFAULT_TOL).unwrap();
            let via_system = is_solution(
                &b.to_vec4().unwrap(),
                &build_system(&a),
                DEFAULT_TOL,
            ).unwrap();
            prop_assert_eq!(direct, via_system);
        }

        #[test]
        fn alpha_offsets_differ_by_the_off_diagonal_gap(a in finite_mat()) {
            let basis = basis_commuting_cone(&a, DEFAULT_TOL);
            if let (Some(a1), Some(a2)) = (basis.alpha1(), basis.alpha2()) {
                // holds exactly up to float rounding in both cases
                let gap = a2 - a1 - (a.a21() - a.a12());
                prop_assert!(gap.abs() <= 1e-12);
            }
        }

        #[test]
        fn basis_size_matches_case(a in finite_mat()) {
            let basis = basis_commuting_cone(&a, DEFAULT_TOL);
            let expected = match basis.case() {
                DiagonalCase::Equal => 6,
                _ => 4,
            };
            prop_assert_eq!(basis.len(), expected);
        }

        #[test]
        fn basis_depends_only_on_entry_differences(
            a in finite_mat(), c in -20.0..20.0f64
        ) {
            // tropically scaling A (adding c to every entry) leaves the
            // scaled basis unchanged
            let shifted = FiniteMat2::new(
                a.a11() + c, a.a12() + c, a.a21() + c, a.a22() + c
            ).unwrap();
            let b1 = basis_commuting_cone(&a, DEFAULT_TOL);
            let b2 = basis_commuting_cone(&shifted, DEFAULT_TOL);
            prop_assert_eq!(b1.case(), b2.case());
            for (u, w) in b1.vectors().iter().zip(b2.vectors().iter()) {
                prop_assert!(u.approx_eq(w, 1e-9));
            }
        }

        #[test]
        fn basis_members_solve_their_system(a in finite_mat()) {
            let basis = basis_commuting_cone(&a, DEFAULT_TOL);
            let sys = build_system(&a);
            for w in basis.vectors().iter() {
                prop_assert!(is_solution(w, &sys, DEFAULT_TOL).unwrap());
            }
        }

        #[test]
        fn random_combinations_stay_in_the_cone(
            a in finite_mat(),
            lambdas in proptest::collection::vec(
                prop_oneof![
                    1 => Just(TropScalar::Bottom),
                    3 => (-10.0..10.0f64).prop_map(TropScalar::finite),
                ],
                6,
            )
        ) {
            let basis = basis_commuting_cone(&a, DEFAULT_TOL);
            let sys = build_system(&a);
            let mut combo = TropVector::bottom(4);
            for (w, &l) in basis.vectors().iter().zip(&lambdas) {
                combo = combo.oplus(&w.scale_by(l)).unwrap();
            }
            prop_assert!(is_solution(&combo, &sys, 1e-9).unwrap());
        }
    }
}
