//! Tropical cones: spans, extremality and independence.
//!
//! A (max-plus) cone is the set of tropical linear combinations
//! `⊕ lambda_i ⊗ w_i` of a generator set. Membership is decided by
//! residuation: project onto the span and compare. Extremality uses the
//! shifted-set minimality criterion, which reduces the geometric
//! definition (no decomposition into strictly smaller cone elements) to
//! finitely many componentwise comparisons.
//!
//! Comparisons take an explicit tolerance `tol`: `u <= v` holds when
//! every component satisfies `u_i <= v_i + tol`, with bottom below every
//! finite value regardless of `tol`. Vectors within `tol` of each other
//! count as equal, so near-ties do not destroy minimality.

use crate::error::Error;
use crate::matrix::TropVector;
use crate::semiring::TropScalar;
use alloc::vec::Vec;

// ---------------------------------------------------------------------------
// Support and scaling
// ---------------------------------------------------------------------------

/// The set of coordinates where a vector is finite, as sorted 0-based
/// indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Support {
    indices: Vec<usize>,
}

impl Support {
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    /// True when every index of `self` also lies in `other`.
    pub fn is_subset_of(&self, other: &Support) -> bool {
        self.indices.iter().all(|&i| other.contains(i))
    }
}

impl TropVector {
    /// The support: indices of finite coordinates.
    pub fn support(&self) -> Support {
        Support {
            indices: (0..self.dim()).filter(|&i| self.get(i).is_finite()).collect(),
        }
    }

    /// Normalizes so the first finite coordinate becomes exactly `0`,
    /// by tropically dividing by it. Errors on the all-bottom vector.
    pub fn scaled(&self) -> Result<TropVector, Error> {
        let first = self
            .entries()
            .iter()
            .find_map(|e| e.value())
            .ok_or(Error::EmptySupport)?;
        Ok(self.scale_by(TropScalar::finite(-first)))
    }

    /// Componentwise order up to `tol`: `self_i <= rhs_i + tol` for all
    /// `i`, with bottom below everything and nothing finite below bottom.
    pub fn leq(&self, rhs: &TropVector, tol: f64) -> Result<bool, Error> {
        if self.dim() != rhs.dim() {
            return Err(Error::DimMismatch {
                left: self.dim(),
                right: rhs.dim(),
            });
        }
        Ok(self
            .entries()
            .iter()
            .zip(rhs.entries())
            .all(|(&a, &b)| match (a.value(), b.value()) {
                (None, _) => true,
                (Some(_), None) => false,
                (Some(x), Some(y)) => x <= y + tol,
            }))
    }
}

// ---------------------------------------------------------------------------
// VectorSet
// ---------------------------------------------------------------------------

/// A finite list of vectors sharing one dimension. Order is preserved;
/// duplicates are allowed.
#[derive(Debug, Clone, PartialEq)]
pub struct VectorSet {
    dim: usize,
    vectors: Vec<TropVector>,
}

impl VectorSet {
    /// Builds a set, checking every vector against `dim`.
    pub fn new(dim: usize, vectors: Vec<TropVector>) -> Result<Self, Error> {
        for v in &vectors {
            if v.dim() != dim {
                return Err(Error::DimMismatch {
                    left: dim,
                    right: v.dim(),
                });
            }
        }
        Ok(Self { dim, vectors })
    }

    pub fn empty(dim: usize) -> Self {
        Self {
            dim,
            vectors: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[TropVector] {
        &self.vectors
    }

    pub fn get(&self, i: usize) -> &TropVector {
        &self.vectors[i]
    }

    pub fn iter(&self) -> core::slice::Iter<'_, TropVector> {
        self.vectors.iter()
    }

    pub fn push(&mut self, v: TropVector) -> Result<(), Error> {
        if v.dim() != self.dim {
            return Err(Error::DimMismatch {
                left: self.dim,
                right: v.dim(),
            });
        }
        self.vectors.push(v);
        Ok(())
    }

    /// A copy with the vector at `idx` removed.
    pub fn without(&self, idx: usize) -> VectorSet {
        let mut vectors = self.vectors.clone();
        vectors.remove(idx);
        Self {
            dim: self.dim,
            vectors,
        }
    }
}

// ---------------------------------------------------------------------------
// Span membership by residuation
// ---------------------------------------------------------------------------

/// The largest `lambda` with `lambda ⊗ w <= v`, or bottom when none
/// exists (some finite coordinate of `w` falls outside `v`'s support,
/// or `w` is all-bottom).
pub fn span_lambda(v: &TropVector, w: &TropVector) -> TropScalar {
    assert_eq!(v.dim(), w.dim(), "span_lambda needs equal dimensions");
    let mut lambda = f64::INFINITY;
    for i in 0..w.dim() {
        match (w.get(i).value(), v.get(i).value()) {
            (None, _) => {}
            (Some(_), None) => return TropScalar::Bottom,
            (Some(wi), Some(vi)) => lambda = lambda.min(vi - wi),
        }
    }
    if lambda.is_finite() {
        TropScalar::finite(lambda)
    } else {
        // w is all-bottom: any multiple is all-bottom, so no largest
        // lambda exists; bottom keeps it out of combinations
        TropScalar::Bottom
    }
}

/// The residuated projection of `v` onto the span of `set`: the
/// greatest span element below `v` (up to coordinate rounding).
pub fn span_projection(v: &TropVector, set: &VectorSet) -> TropVector {
    assert_eq!(v.dim(), set.dim(), "span_projection needs equal dimensions");
    let mut acc = TropVector::bottom(v.dim());
    for w in set.iter() {
        let combined = w.scale_by(span_lambda(v, w));
        acc = acc.oplus(&combined).expect("dimensions checked above");
    }
    acc
}

/// True when `v` is a tropical combination of `set`, decided by
/// comparing `v` with its residuated projection. The all-bottom vector
/// lies in every span (empty combination).
pub fn in_span(v: &TropVector, set: &VectorSet, tol: f64) -> bool {
    if v.is_bottom() {
        return true;
    }
    span_projection(v, set).approx_eq(v, tol)
}

// ---------------------------------------------------------------------------
// Minimality and extremality
// ---------------------------------------------------------------------------

/// Shifts each member of `set` supported at `t` so its `t`-th
/// coordinate matches `u_t`, dropping members with `u_t` outside their
/// support. Errors when `t` is outside the support of `u`.
pub fn shift_set(set: &VectorSet, u: &TropVector, t: usize) -> Result<VectorSet, Error> {
    if u.dim() != set.dim() {
        return Err(Error::DimMismatch {
            left: set.dim(),
            right: u.dim(),
        });
    }
    let ut = match u.get(t).value() {
        Some(x) => x,
        None => return Err(Error::IndexNotInSupport { index: t }),
    };
    let mut out = VectorSet::empty(set.dim());
    for w in set.iter() {
        if let Some(wt) = w.get(t).value() {
            out.push(w.scale_by(TropScalar::finite(ut - wt)))
                .expect("dimension preserved by scaling");
        }
    }
    Ok(out)
}

/// True when no member of `set` lies strictly below `v`: every `u` with
/// `u <= v` is within `tol` of `v` itself.
pub fn is_minimal(v: &TropVector, set: &VectorSet, tol: f64) -> bool {
    assert_eq!(v.dim(), set.dim(), "is_minimal needs equal dimensions");
    set.iter().all(|u| {
        let below = u.leq(v, tol).expect("dimensions checked above");
        !below || u.approx_eq(v, tol)
    })
}

/// Extremality of `v` with respect to the generators in `set`: some
/// coordinate `t` in the support of `v` makes `v` minimal among the
/// generators shifted to agree with `v` at `t`. Extremal vectors are
/// exactly those that admit no decomposition into strictly smaller span
/// elements. Errors when `v` is all-bottom.
pub fn is_extremal(v: &TropVector, set: &VectorSet, tol: f64) -> Result<bool, Error> {
    assert_eq!(v.dim(), set.dim(), "is_extremal needs equal dimensions");
    let supp = v.support();
    if supp.is_empty() {
        return Err(Error::EmptySupport);
    }
    for &t in supp.indices() {
        let shifted = shift_set(set, v, t).expect("t is in the support of v");
        if is_minimal(v, &shifted, tol) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// True when no member lies in the span of the others.
pub fn is_independent(set: &VectorSet, tol: f64) -> bool {
    (0..set.len()).all(|i| !in_span(set.get(i), &set.without(i), tol))
}
