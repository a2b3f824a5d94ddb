//! Barycentric projection of the commuting cone's extremals.
//!
//! Off the equal-diagonal case, every generator is normalized at one
//! designated coordinate; the remaining three coordinates project into
//! a reference triangle via `x -> exp(x)` (bottom maps to weight `0`)
//! followed by normalization to barycentric coordinates. The first
//! generator lands on the top vertex, the second and third on the left
//! and right edges, the fourth on the base — and the three connecting
//! segments (cevians) meet in a single interior point `omega`.
//! [`concurrency_check`] measures how far the pairwise intersections
//! spread, which doubles as a numeric audit of the basis offsets.

use crate::commute::{ConeBasis, DiagonalCase};
use crate::dd::Dd;
use crate::error::Error;
use crate::matrix::TropVector;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use libm::{exp, hypot};

/// Vertices of the reference triangle: left, right, and apex of an
/// equilateral triangle with unit base (apex height is sqrt(3)/2).
pub const TRIANGLE: [[f64; 2]; 3] = [[0.0, 0.0], [1.0, 0.0], [0.5, 0.866_025_403_784_438_6]];

/// Largest violation allowed when validating that barycentric
/// coordinates are nonnegative and sum to one.
pub const BARY_SUM_TOL: f64 = 1e-12;

// ---------------------------------------------------------------------------
// Barycentric points
// ---------------------------------------------------------------------------

/// A labelled point in barycentric coordinates over [`TRIANGLE`].
#[derive(Debug, Clone, PartialEq)]
pub struct BaryPoint {
    phi: [f64; 3],
    label: String,
}

impl BaryPoint {
    /// Validates that the coordinates are nonnegative and sum to one
    /// within [`BARY_SUM_TOL`].
    pub fn new(phi: [f64; 3], label: impl Into<String>) -> Result<Self, Error> {
        let sum = phi[0] + phi[1] + phi[2];
        if phi.iter().any(|&p| p < 0.0) || (sum - 1.0).abs() > BARY_SUM_TOL {
            return Err(Error::InvalidBarycentric { phi });
        }
        Ok(Self {
            phi,
            label: label.into(),
        })
    }

    pub fn phi(&self) -> [f64; 3] {
        self.phi
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// The cartesian position with respect to a triangle's vertices.
    pub fn to_cartesian(&self, tri: &[[f64; 2]; 3]) -> [f64; 2] {
        let [p1, p2, p3] = self.phi;
        [
            p1 * tri[0][0] + p2 * tri[1][0] + p3 * tri[2][0],
            p1 * tri[0][1] + p2 * tri[1][1] + p3 * tri[2][1],
        ]
    }
}

/// Exponentiates three max-plus coordinates and normalizes the result.
/// The largest finite entry is subtracted first, so overflow cannot
/// occur and the weights stay in `[0, 1]`.
fn softmax3(triple: [crate::semiring::TropScalar; 3]) -> Result<[f64; 3], Error> {
    let peak = triple
        .iter()
        .filter_map(|s| s.value())
        .fold(f64::NEG_INFINITY, f64::max);
    if peak == f64::NEG_INFINITY {
        // all-bottom triple: nothing to normalize
        return Err(Error::DegenerateProjection);
    }
    let w = triple.map(|s| s.value().map_or(0.0, |x| exp(x - peak)));
    let sum = w[0] + w[1] + w[2];
    Ok([w[0] / sum, w[1] / sum, w[2] / sum])
}

/// Projects the generators of an off-diagonal basis into the triangle.
///
/// * Above the diagonal each generator is normalized at `b11`; the
///   triple `(b12, b21, b22)` maps to the corners (left, right, top).
/// * Below the diagonal the generators are re-normalized at `b22`; the
///   triple `(b12, b21, b11)` maps to the corners, so `b11` is on top.
///
/// The equal-diagonal case has no designated finite coordinate shared
/// by all six generators, so projection is undefined there.
pub fn project_extremals(basis: &ConeBasis) -> Result<Vec<BaryPoint>, Error> {
    let (norm_at, triple_of): (usize, [usize; 3]) = match basis.case() {
        DiagonalCase::Above => (0, [1, 2, 3]),
        DiagonalCase::Below => (3, [1, 2, 0]),
        DiagonalCase::Equal => return Err(Error::ProjectionUndefined),
    };
    let mut out = Vec::with_capacity(basis.len());
    for (i, w) in basis.vectors().iter().enumerate() {
        let shift = w
            .get(norm_at)
            .value()
            .map(|x| w.scale_by(crate::semiring::TropScalar::finite(-x)));
        let w: TropVector = match shift {
            Some(shifted) => shifted,
            // the designated coordinate is bottom (the fourth
            // generator): already expressed relative to it
            None => w.clone(),
        };
        let phi = softmax3([
            w.get(triple_of[0]),
            w.get(triple_of[1]),
            w.get(triple_of[2]),
        ])?;
        out.push(BaryPoint::new(phi, format!("beta{}", i + 1))?);
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Segment intersection
// ---------------------------------------------------------------------------

fn cross(a: [f64; 2], b: [f64; 2]) -> f64 {
    a[0] * b[1] - a[1] * b[0]
}

fn sub(a: [f64; 2], b: [f64; 2]) -> [f64; 2] {
    [a[0] - b[0], a[1] - b[1]]
}

/// Intersection of the closed segments `p1p2` and `p3p4`.
///
/// Returns `None` for parallel or non-crossing segments (endpoints
/// count as crossing). Collinear segments that overlap in more than a
/// single point have no unique answer and report
/// [`Error::AmbiguousIntersection`].
pub fn segment_intersection(
    p1: [f64; 2],
    p2: [f64; 2],
    p3: [f64; 2],
    p4: [f64; 2],
) -> Result<Option<[f64; 2]>, Error> {
    let r = sub(p2, p1);
    let s = sub(p4, p3);
    let qp = sub(p3, p1);
    let denom = cross(r, s);

    if denom == 0.0 {
        if cross(qp, r) != 0.0 {
            // parallel, distinct lines
            return Ok(None);
        }
        // collinear: compare parameter intervals along r
        let rr = r[0] * r[0] + r[1] * r[1];
        if rr == 0.0 {
            // degenerate zero-length first segment
            return Err(Error::AmbiguousIntersection);
        }
        let t3 = (qp[0] * r[0] + qp[1] * r[1]) / rr;
        let t4 = t3 + (s[0] * r[0] + s[1] * r[1]) / rr;
        let (lo, hi) = (t3.min(t4).max(0.0), t3.max(t4).min(1.0));
        return if lo > hi {
            Ok(None)
        } else if lo == hi {
            Ok(Some([p1[0] + lo * r[0], p1[1] + lo * r[1]]))
        } else {
            Err(Error::AmbiguousIntersection)
        };
    }

    let t = cross(qp, s) / denom;
    let u = cross(qp, r) / denom;
    if (0.0..=1.0).contains(&t) && (0.0..=1.0).contains(&u) {
        Ok(Some([p1[0] + t * r[0], p1[1] + t * r[1]]))
    } else {
        Ok(None)
    }
}

// ---------------------------------------------------------------------------
// Concurrency of the three cevians
// ---------------------------------------------------------------------------

/// Numeric evidence that the three cevians meet in one point.
#[derive(Debug, Clone, PartialEq)]
pub struct ConcurrencyReport {
    /// Cartesian intersection of the first two cevians.
    pub omega: [f64; 2],
    /// Largest pairwise distance between the three cevian
    /// intersections; zero exactly when they are concurrent.
    pub residual: f64,
    /// Distance between the fourth projected generator and the point
    /// where the line from the apex through `omega` meets the base.
    pub foot_gap: f64,
    /// Violation of the offset identity `alpha2 - alpha1 = delta`,
    /// where `delta` is the gap between the fourth generator's `b21`
    /// and `b12` entries.
    pub alpha_gap: f64,
    /// True when all three gaps are within the tolerance passed to
    /// [`concurrency_check`].
    pub pass: bool,
}

/// The four projected generators, with the strict-interior guarantee
/// the cevian construction needs.
fn projected_points4(basis: &ConeBasis) -> Result<Vec<BaryPoint>, Error> {
    let points = project_extremals(basis)?;
    if points.len() != 4 {
        return Err(Error::DegenerateProjection);
    }
    // the construction needs beta2 and beta3 strictly inside their
    // edges and beta4 strictly inside the base; equality can only
    // happen when an exponent under- or overflows
    let interior = |p: f64| p > 0.0 && p < 1.0;
    let phi2 = points[1].phi();
    let phi3 = points[2].phi();
    let phi4 = points[3].phi();
    if !interior(phi2[0]) || !interior(phi3[1]) || !interior(phi4[0]) {
        return Err(Error::DegenerateProjection);
    }
    Ok(points)
}

// Compensated 2-D helpers for the concurrency measurement. Large
// offsets put a projected point within ~1e-9 of a vertex, leaving two
// cevians almost parallel; intersecting those in plain f64 amplifies
// endpoint rounding by the reciprocal of the tiny angle between them,
// so the measured spread reflects noise (up to ~1e-8) rather than
// geometry. Two ingredients keep the measurement honest: the segment
// arithmetic runs in double-double, and the embedding anchors each
// point at its dominant vertex so the position error scales with the
// small barycentric weights (absolute error ~1e-24) instead of the
// f64 epsilon of the dominant one.

type DdPoint = [Dd; 2];

/// Embeds barycentric coordinates into the reference triangle,
/// anchoring at the dominant vertex and recovering that vertex's
/// weight from the unit-sum constraint.
fn dd_embed(phi: [f64; 3]) -> DdPoint {
    let mut k = 0;
    for i in 1..3 {
        if phi[i] > phi[k] {
            k = i;
        }
    }
    let anchor = TRIANGLE[k];
    let mut x = Dd::from_f64(anchor[0]);
    let mut y = Dd::from_f64(anchor[1]);
    for (i, (w, v)) in phi.iter().zip(&TRIANGLE).enumerate() {
        if i == k {
            continue;
        }
        // corner differences are exact in f64 for this triangle
        x = x.add(Dd::prod(*w, v[0] - anchor[0]));
        y = y.add(Dd::prod(*w, v[1] - anchor[1]));
    }
    [x, y]
}

fn dd_sub2(a: DdPoint, b: DdPoint) -> DdPoint {
    [a[0].sub(b[0]), a[1].sub(b[1])]
}

fn dd_cross2(a: DdPoint, b: DdPoint) -> Dd {
    a[0].mul(b[1]).sub(a[1].mul(b[0]))
}

fn dd_dist2(a: DdPoint, b: DdPoint) -> f64 {
    hypot(a[0].sub(b[0]).value(), a[1].sub(b[1]).value())
}

/// Meet of segments `p..q` and `a..b`; both parameters must stay in
/// `[0, 1]` up to a sliver of slack for endpoint rounding.
fn dd_segment_meet(p: DdPoint, q: DdPoint, a: DdPoint, b: DdPoint) -> Result<DdPoint, Error> {
    let r = dd_sub2(q, p);
    let s = dd_sub2(b, a);
    let denom = dd_cross2(r, s);
    if denom.value() == 0.0 {
        return Err(Error::DegenerateProjection);
    }
    let ap = dd_sub2(a, p);
    let t = dd_cross2(ap, s).div(denom);
    let u = dd_cross2(ap, r).div(denom);
    let on_segment = |w: f64| (-1e-12..=1.0 + 1e-12).contains(&w);
    if !on_segment(t.value()) || !on_segment(u.value()) {
        return Err(Error::DegenerateProjection);
    }
    Ok([p[0].add(t.mul(r[0])), p[1].add(t.mul(r[1]))])
}

/// Intersects the three cevians of the projected picture pairwise and
/// measures their spread.
///
/// The cevians are: right vertex to the projected second generator,
/// left vertex to the projected third one, and apex (where the first
/// generator lands) to the fourth one on the base. Their pairwise
/// intersections coincide exactly when the basis offsets satisfy
/// `alpha2 - alpha1 = b21 - b12` on the fourth generator, which the
/// report checks on a log scale as `alpha_gap`. The segment arithmetic
/// runs in compensated precision so the reported spread measures the
/// geometry even when two cevians are nearly parallel.
pub fn concurrency_check(basis: &ConeBasis, tol: f64) -> Result<ConcurrencyReport, Error> {
    let points = projected_points4(basis)?;
    let p1 = dd_embed(points[0].phi());
    let p2 = dd_embed(points[1].phi());
    let p3 = dd_embed(points[2].phi());
    let p4 = dd_embed(points[3].phi());
    let v1 = dd_embed([1.0, 0.0, 0.0]);
    let v2 = dd_embed([0.0, 1.0, 0.0]);

    let cevians = [(v2, p2), (v1, p3), (p1, p4)];
    let mut meets = [[Dd::ZERO; 2]; 3];
    let pairs = [(0, 1), (0, 2), (1, 2)];
    for (slot, &(i, j)) in meets.iter_mut().zip(&pairs) {
        *slot = dd_segment_meet(cevians[i].0, cevians[i].1, cevians[j].0, cevians[j].1)?;
    }
    let omega = [meets[0][0].value(), meets[0][1].value()];
    let residual = dd_dist2(meets[0], meets[1])
        .max(dd_dist2(meets[0], meets[2]))
        .max(dd_dist2(meets[1], meets[2]));

    // extend apex -> omega down to the base and compare with p4
    let apex = p1;
    let dy = apex[1].sub(meets[0][1]);
    if dy.value() <= 0.0 {
        return Err(Error::DegenerateProjection);
    }
    let u = apex[1].div(dy);
    let foot_x = apex[0].add(u.mul(meets[0][0].sub(apex[0])));
    let foot_gap = foot_x.sub(p4[0]).value().abs();

    // offset identity on the log scale, read off the generators
    let (alpha1, alpha2) = match (basis.alpha1(), basis.alpha2()) {
        (Some(a1), Some(a2)) => (a1, a2),
        _ => return Err(Error::ProjectionUndefined),
    };
    let b4 = basis.vectors().get(3);
    let delta = match (b4.get(2).value(), b4.get(1).value()) {
        (Some(b21), Some(b12)) => b21 - b12,
        _ => return Err(Error::DegenerateProjection),
    };
    let alpha_gap = (alpha2 - alpha1 - delta).abs();

    let pass = residual <= tol && foot_gap <= tol && alpha_gap <= tol;
    Ok(ConcurrencyReport {
        omega,
        residual,
        foot_gap,
        alpha_gap,
        pass,
    })
}

// ---------------------------------------------------------------------------
// Plot description
// ---------------------------------------------------------------------------

/// What a plot segment endpoint is anchored to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlotAnchor {
    /// A triangle corner, `0..=2` as in [`TRIANGLE`].
    Vertex(u8),
    /// A projected generator, indexed into [`TrianglePlot::points`].
    Point(usize),
    /// The common cevian intersection.
    Omega,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LineStyle {
    Solid,
    Dotted,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PlotSegment {
    pub from: PlotAnchor,
    pub to: PlotAnchor,
    pub style: LineStyle,
}

/// A renderer-independent description of the projection picture:
/// labelled points, the cevians (dotted), the hull edges through
/// `omega` (solid), and corner labels naming the matrix entries.
#[derive(Debug, Clone, PartialEq)]
pub struct TrianglePlot {
    pub corner_labels: [&'static str; 3],
    pub points: Vec<BaryPoint>,
    pub omega: BaryPoint,
    pub segments: Vec<PlotSegment>,
    pub residual: f64,
}

impl TrianglePlot {
    /// Cartesian position of an anchor over [`TRIANGLE`].
    pub fn anchor_position(&self, anchor: PlotAnchor) -> [f64; 2] {
        match anchor {
            PlotAnchor::Vertex(i) => TRIANGLE[i as usize],
            PlotAnchor::Point(i) => self.points[i].to_cartesian(&TRIANGLE),
            PlotAnchor::Omega => self.omega.to_cartesian(&TRIANGLE),
        }
    }
}

/// Barycentric coordinates of a cartesian point over [`TRIANGLE`];
/// tiny negative rounding (within `tol`) is clamped to zero.
fn bary_of_cartesian(p: [f64; 2], tol: f64) -> Result<[f64; 3], Error> {
    let [v1, v2, v3] = TRIANGLE;
    let det = (v1[0] - v3[0]) * (v2[1] - v3[1]) - (v2[0] - v3[0]) * (v1[1] - v3[1]);
    let d = sub(p, v3);
    let mut phi = [
        (d[0] * (v2[1] - v3[1]) - (v2[0] - v3[0]) * d[1]) / det,
        ((v1[0] - v3[0]) * d[1] - d[0] * (v1[1] - v3[1])) / det,
        0.0,
    ];
    phi[2] = 1.0 - phi[0] - phi[1];
    for c in &mut phi {
        if *c < 0.0 {
            if *c < -tol {
                return Err(Error::DegenerateProjection);
            }
            *c = 0.0;
        }
    }
    let sum = phi[0] + phi[1] + phi[2];
    Ok([phi[0] / sum, phi[1] / sum, phi[2] / sum])
}

/// Builds the full plot description for an off-diagonal basis,
/// verifying concurrency along the way.
pub fn triangle_plot(basis: &ConeBasis, tol: f64) -> Result<TrianglePlot, Error> {
    let points = project_extremals(basis)?;
    let report = concurrency_check(basis, tol)?;
    let omega = BaryPoint::new(bary_of_cartesian(report.omega, tol)?, "omega")?;

    let corner_labels = match basis.case() {
        DiagonalCase::Above => ["b12", "b21", "b22"],
        DiagonalCase::Below => ["b12", "b21", "b11"],
        DiagonalCase::Equal => return Err(Error::ProjectionUndefined),
    };

    use LineStyle::{Dotted, Solid};
    use PlotAnchor::{Omega, Point, Vertex};
    let seg = |from, to, style| PlotSegment { from, to, style };
    let segments = alloc::vec![
        // cevians
        seg(Vertex(1), Point(1), Dotted),
        seg(Vertex(0), Point(2), Dotted),
        seg(Point(0), Point(3), Dotted),
        // boundary of the projected cone picture
        seg(Point(0), Point(1), Solid),
        seg(Point(0), Point(2), Solid),
        seg(Omega, Point(1), Solid),
        seg(Omega, Point(2), Solid),
        seg(Omega, Point(3), Solid),
    ];

    Ok(TrianglePlot {
        corner_labels,
        points,
        omega,
        segments,
        residual: report.residual,
    })
}
