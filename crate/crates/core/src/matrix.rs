//! Dense max-plus matrices and vectors.
//!
//! Matrices are stored row-major. All binary operations check shapes and
//! return [`Error`] on mismatch rather than panicking, so callers can
//! surface shape problems from untrusted input.

use crate::error::Error;
use crate::semiring::TropScalar;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

// ---------------------------------------------------------------------------
// TropMatrix
// ---------------------------------------------------------------------------

/// A dense matrix over the max-plus semiring.
#[derive(Debug, Clone, PartialEq)]
pub struct TropMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<TropScalar>,
}

impl TropMatrix {
    /// Builds a matrix from row-major entries.
    pub fn new(rows: usize, cols: usize, entries: Vec<TropScalar>) -> Result<Self, Error> {
        if entries.len() != rows * cols {
            return Err(Error::Parse(format!(
                "{}x{} matrix needs {} entries, got {}",
                rows,
                cols,
                rows * cols,
                entries.len()
            )));
        }
        Ok(Self { rows, cols, entries })
    }

    /// Builds a matrix from rows of equal length.
    pub fn from_rows(rows: &[Vec<TropScalar>]) -> Result<Self, Error> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if r == 0 || c == 0 {
            return Err(Error::Parse(String::from("empty matrix")));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != c {
                return Err(Error::Parse(format!(
                    "row {} has {} entries, expected {}",
                    i + 1,
                    row.len(),
                    c
                )));
            }
        }
        let entries = rows.iter().flatten().copied().collect();
        Ok(Self { rows: r, cols: c, entries })
    }

    /// The all-bottom matrix (additive identity).
    pub fn bottom(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: alloc::vec![TropScalar::Bottom; rows * cols],
        }
    }

    /// The tropical identity: `0` on the diagonal, `-inf` elsewhere.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::bottom(n, n);
        for i in 0..n {
            m.set(i, i, TropScalar::finite(0.0));
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    /// Entry at `(i, j)`; panics if out of bounds.
    pub fn get(&self, i: usize, j: usize) -> TropScalar {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        self.entries[i * self.cols + j]
    }

    /// Overwrites the entry at `(i, j)`; panics if out of bounds.
    pub fn set(&mut self, i: usize, j: usize, v: TropScalar) {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        self.entries[i * self.cols + j] = v;
    }

    /// True when no entry is bottom.
    pub fn is_finite(&self) -> bool {
        self.entries.iter().all(|e| e.is_finite())
    }

    /// Entrywise maximum of two equally shaped matrices.
    pub fn oplus(&self, rhs: &Self) -> Result<Self, Error> {
        if self.shape() != rhs.shape() {
            return Err(Error::ShapeMismatch {
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(&a, &b)| a.oplus(b))
            .collect();
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    /// Max-plus matrix product: `(A ⊗ B)_ij = max_k (a_ik + b_kj)`.
    pub fn otimes(&self, rhs: &Self) -> Result<Self, Error> {
        if self.cols != rhs.rows {
            return Err(Error::ShapeMismatch {
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        let mut out = Self::bottom(self.rows, rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = TropScalar::Bottom;
                for k in 0..self.cols {
                    acc = acc.oplus(self.get(i, k).otimes(rhs.get(k, j)));
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    /// Matrix-vector product, treating `x` as a column vector.
    pub fn otimes_vec(&self, x: &TropVector) -> Result<TropVector, Error> {
        if self.cols != x.dim() {
            return Err(Error::DimMismatch {
                left: self.cols,
                right: x.dim(),
            });
        }
        let entries = (0..self.rows)
            .map(|i| {
                let mut acc = TropScalar::Bottom;
                for k in 0..self.cols {
                    acc = acc.oplus(self.get(i, k).otimes(x.get(k)));
                }
                acc
            })
            .collect();
        Ok(TropVector::new(entries))
    }

    /// Entrywise comparison up to `tol`; false on shape mismatch.
    pub fn approx_eq(&self, rhs: &Self, tol: f64) -> bool {
        self.shape() == rhs.shape()
            && self
                .entries
                .iter()
                .zip(&rhs.entries)
                .all(|(&a, &b)| a.approx_eq(b, tol))
    }

    /// Flattens a 2x2 matrix into `(b11, b12, b21, b22)`.
    pub fn to_vec4(&self) -> Result<TropVector, Error> {
        if self.shape() != (2, 2) {
            return Err(Error::WrongShape {
                expected: (2, 2),
                found: self.shape(),
            });
        }
        Ok(TropVector::new(self.entries.clone()))
    }
}

impl fmt::Display for TropMatrix {
    /// One line per row, entries space-separated, bottom as `-inf`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            if i > 0 {
                writeln!(f)?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        Ok(())
    }
}

impl FromStr for TropMatrix {
    type Err = Error;

    /// Parses rows separated by `;` or newlines, entries separated by
    /// whitespace or commas, with `-inf` for bottom:
    /// `"0.166 0.861; -0.62 -0.76"`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let mut rows: Vec<Vec<TropScalar>> = Vec::new();
        for (i, line) in s.split([';', '\n']).enumerate() {
            let row = parse_row(line, i + 1)?;
            if !row.is_empty() {
                rows.push(row);
            }
        }
        Self::from_rows(&rows)
    }
}

/// Parses one row of scalars; `row_no` is 1-based for error messages.
fn parse_row(line: &str, row_no: usize) -> Result<Vec<TropScalar>, Error> {
    line.split([' ', '\t', ','])
        .filter(|tok| !tok.trim().is_empty())
        .enumerate()
        .map(|(j, tok)| {
            tok.parse().map_err(|e| match e {
                Error::Parse(msg) => {
                    Error::Parse(format!("row {}, entry {}: {}", row_no, j + 1, msg))
                }
                other => other,
            })
        })
        .collect()
}

// ---------------------------------------------------------------------------
// TropVector
// ---------------------------------------------------------------------------

/// A max-plus column vector.
#[derive(Debug, Clone, PartialEq)]
pub struct TropVector {
    entries: Vec<TropScalar>,
}

impl TropVector {
    pub fn new(entries: Vec<TropScalar>) -> Self {
        Self { entries }
    }

    /// The all-bottom vector of dimension `dim`.
    pub fn bottom(dim: usize) -> Self {
        Self {
            entries: alloc::vec![TropScalar::Bottom; dim],
        }
    }

    /// Builds a vector of finite entries.
    pub fn from_finite(vals: &[f64]) -> Self {
        Self {
            entries: vals.iter().map(|&v| TropScalar::finite(v)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    /// Entry at `i`; panics if out of bounds.
    pub fn get(&self, i: usize) -> TropScalar {
        self.entries[i]
    }

    /// Overwrites the entry at `i`; panics if out of bounds.
    pub fn set(&mut self, i: usize, v: TropScalar) {
        self.entries[i] = v;
    }

    pub fn entries(&self) -> &[TropScalar] {
        &self.entries
    }

    /// True when every entry is bottom.
    pub fn is_bottom(&self) -> bool {
        self.entries.iter().all(|e| e.is_bottom())
    }

    /// Entrywise maximum of two vectors of equal dimension.
    pub fn oplus(&self, rhs: &Self) -> Result<Self, Error> {
        if self.dim() != rhs.dim() {
            return Err(Error::DimMismatch {
                left: self.dim(),
                right: rhs.dim(),
            });
        }
        Ok(Self {
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(&a, &b)| a.oplus(b))
                .collect(),
        })
    }

    /// The scalar multiple `lambda ⊗ v`.
    pub fn scale_by(&self, lambda: TropScalar) -> Self {
        Self {
            entries: self.entries.iter().map(|&e| lambda.otimes(e)).collect(),
        }
    }

    /// Entrywise comparison up to `tol`; false on dimension mismatch.
    pub fn approx_eq(&self, rhs: &Self, tol: f64) -> bool {
        self.dim() == rhs.dim()
            && self
                .entries
                .iter()
                .zip(&rhs.entries)
                .all(|(&a, &b)| a.approx_eq(b, tol))
    }

    /// Reshapes `(b11, b12, b21, b22)` into the 2x2 matrix `[[b11, b12],
    /// [b21, b22]]`.
    pub fn to_mat2(&self) -> Result<TropMatrix, Error> {
        if self.dim() != 4 {
            return Err(Error::WrongDim {
                expected: 4,
                found: self.dim(),
            });
        }
        TropMatrix::new(2, 2, self.entries.clone())
    }
}

impl fmt::Display for TropVector {
    /// Comma-separated entries: `0, -0.14, -inf, 0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl FromStr for TropVector {
    type Err = Error;

    /// Parses a single row of scalars separated by whitespace or commas.
    fn from_str(s: &str) -> Result<Self, Error> {
        let entries = parse_row(s, 1)?;
        if entries.is_empty() {
            return Err(Error::Parse(String::from("empty vector")));
        }
        Ok(Self { entries })
    }
}
