//! Dense exact-rational matrices: block assembly, row selection and
//! fraction-free determinants.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::par::Execution;
use crate::poly::Polynomial;
use crate::rational::{common_denominator, Rational};

/// Row-major matrix of rationals. Immutable once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl ExactMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Index(format!(
                "{} entries do not fill a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(ExactMatrix { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = Rational::one();
        }
        m
    }

    /// Builds from nested rows; all rows must have the same length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Index("ragged rows".into()));
        }
        let n = rows.len();
        Self::new(n, cols, rows.into_iter().flatten().collect())
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| crate::rational::int(v)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    /// Copy with row `r` multiplied by `factors[r]`; rows past the end of
    /// `factors` are dropped.
    pub fn scale_rows(&self, factors: &[Rational]) -> Self {
        let rows = factors.len().min(self.rows);
        let entries = (0..rows)
            .flat_map(|r| self.row(r).iter().map(move |v| v * &factors[r]))
            .collect();
        ExactMatrix {
            rows,
            cols: self.cols,
            entries,
        }
    }

    /// Consecutive rows `start..end`.
    pub fn row_range(&self, start: usize, end: usize) -> Result<Self> {
        if start > end || end > self.rows {
            return Err(Error::Index(format!(
                "row range {start}..{end} outside 0..{}",
                self.rows
            )));
        }
        Ok(ExactMatrix {
            rows: end - start,
            cols: self.cols,
            entries: self.entries[start * self.cols..end * self.cols].to_vec(),
        })
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(|v| v.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

/// One block copied into a larger matrix at `(row_offset, col_offset)`.
#[derive(Clone, Debug)]
pub struct Placement<'a> {
    pub source: &'a ExactMatrix,
    pub row_offset: usize,
    pub col_offset: usize,
}

/// Layout of a block matrix; unplaced cells are zero.
#[derive(Clone, Debug)]
pub struct BlockSpec<'a> {
    pub placements: Vec<Placement<'a>>,
    pub total_rows: usize,
    pub total_cols: usize,
}

impl<'a> BlockSpec<'a> {
    pub fn new(total_rows: usize, total_cols: usize) -> Self {
        BlockSpec {
            placements: Vec::new(),
            total_rows,
            total_cols,
        }
    }

    pub fn place(&mut self, source: &'a ExactMatrix, row_offset: usize, col_offset: usize) {
        self.placements.push(Placement {
            source,
            row_offset,
            col_offset,
        });
    }
}

pub fn assemble(spec: &BlockSpec) -> Result<ExactMatrix> {
    let (rows, cols) = (spec.total_rows, spec.total_cols);
    let mut out = ExactMatrix::zeros(rows, cols);
    let mut taken = vec![false; rows * cols];
    for (idx, p) in spec.placements.iter().enumerate() {
        let (h, w) = p.source.dims();
        if p.row_offset + h > rows || p.col_offset + w > cols {
            return Err(Error::OutOfBounds(format!(
                "placement {idx}: {h}x{w} block at ({}, {}) exceeds {rows}x{cols}",
                p.row_offset, p.col_offset
            )));
        }
        for r in 0..h {
            for c in 0..w {
                let cell = (p.row_offset + r) * cols + p.col_offset + c;
                if taken[cell] {
                    return Err(Error::Overlap {
                        row: p.row_offset + r,
                        col: p.col_offset + c,
                    });
                }
                taken[cell] = true;
                out.entries[cell] = p.source.get(r, c).clone();
            }
        }
    }
    Ok(out)
}

/// Submatrix with the given rows, in the given order.
pub fn select_rows(m: &ExactMatrix, row_indices: &[usize]) -> Result<ExactMatrix> {
    let mut seen = vec![false; m.rows];
    let mut entries = Vec::with_capacity(row_indices.len() * m.cols);
    for &r in row_indices {
        if r >= m.rows {
            return Err(Error::Index(format!("row {r} outside 0..{}", m.rows)));
        }
        if std::mem::replace(&mut seen[r], true) {
            return Err(Error::Index(format!("row {r} selected twice")));
        }
        entries.extend_from_slice(m.row(r));
    }
    Ok(ExactMatrix {
        rows: row_indices.len(),
        cols: m.cols,
        entries,
    })
}

/// Exact determinant.
///
/// Each column is scaled by the lcm of its denominators, single-step Bareiss
/// elimination runs on the resulting integer matrix, and the product of the
/// column scales is divided back out.
pub fn determinant(m: &ExactMatrix) -> Result<Rational> {
    if m.rows != m.cols {
        return Err(Error::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let n = m.rows;
    let mut scale = BigInt::one();
    let mut a = vec![BigInt::zero(); n * n];
    for c in 0..n {
        let lcm = common_denominator((0..n).map(|r| m.get(r, c)));
        for r in 0..n {
            let v = m.get(r, c);
            a[r * n + c] = v.numer() * (&lcm / v.denom());
        }
        scale *= lcm;
    }
    let det = bareiss(&mut a, n);
    Ok(Rational::new(det, scale))
}

/// Fraction-free Gaussian elimination in place; returns the determinant.
fn bareiss(a: &mut [BigInt], n: usize) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        let Some(p) = (k..n).find(|&r| !a[r * n + k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            for c in k..n {
                a.swap(p * n + c, k * n + c);
            }
            negate = !negate;
        }
        let (head, tail) = a.split_at_mut((k + 1) * n);
        let pivot_row = &head[k * n..];
        let pivot = &pivot_row[k];
        for row in tail.chunks_mut(n) {
            let lead = std::mem::take(&mut row[k]);
            for c in k + 1..n {
                let cell = &mut row[c];
                let other = &pivot_row[c];
                if lead.is_zero() || other.is_zero() {
                    if cell.is_zero() {
                        continue;
                    }
                    *cell *= pivot;
                } else {
                    *cell = &*cell * pivot - &lead * other;
                }
                if !prev.is_one() {
                    *cell = cell.div_floor(&prev);
                }
            }
        }
        prev = pivot.clone();
    }
    let det = std::mem::take(&mut a[n * n - 1]);
    if negate {
        -det
    } else {
        det
    }
}

/// Polynomial `sum_tau det(M_tau) x^tau` where `M_tau` is the top
/// `cols - 1` rows of `m` plus row `cols - 1 + (j - tau)`, `j = rows - cols`.
///
/// This is the common determinant-polynomial construction behind both
/// classical and recursive subresultants.
pub fn minor_polynomial(m: &ExactMatrix, exec: Execution) -> Result<Polynomial> {
    let (rows, cols) = m.dims();
    if rows < cols || cols == 0 {
        return Err(Error::Index(format!(
            "minor polynomial needs rows >= cols >= 1, got {rows}x{cols}"
        )));
    }
    let j = rows - cols;
    let dets = exec.map_range(0..j + 1, |tau| {
        let mut idx: Vec<usize> = (0..cols - 1).collect();
        idx.push(cols - 1 + (j - tau));
        determinant(&select_rows(m, &idx)?)
    });
    Ok(Polynomial::new(dets.into_iter().collect::<Result<Vec<_>>>()?))
}
