//! Recursive subresultant matrices and recursive subresultants.
//!
//! For level `k >= 2` the matrix `M^(k,j)` is assembled from the level
//! `k-1` matrix at `j_{k-1}`: its top rows `M_U` repeat down the diagonal,
//! and below them a staircase of `j_{k-1}-j-1` copies of its bottom rows
//! `M_L` is followed by a staircase of `j_{k-1}-j` copies of the row-scaled
//! `M_L'`. Determinants of its square minors express level-`k` elements in
//! the coefficients of the original pair, up to the similarity factor
//! `R_{k,j}` computed by [`similarity_factors`].

use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::linalg::{assemble, minor_polynomial, BlockSpec, ExactMatrix};
use crate::par::Execution;
use crate::poly::Polynomial;
use crate::prs::RecursivePrs;
use crate::rational::{pow, sign_power, Rational};
use crate::report::{Clause, ClauseCheck, VerificationReport};
use crate::subres::{coefficient_layout, fundamental_checks, fundamental_factor, subresultant, FactorAt};

/// The three blocks a level-`k` matrix is built from, cut out of a matrix
/// with `rows - cols = j'`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockSplit {
    /// All but the bottom `j' + 1` rows.
    pub upper: ExactMatrix,
    /// The bottom `j' + 1` rows.
    pub lower: ExactMatrix,
    /// `lower` with its `r`-th row (0-based) scaled by `j' - r`, bottom
    /// row dropped.
    pub scaled_lower: ExactMatrix,
}

impl BlockSplit {
    pub fn of(m: &ExactMatrix) -> Result<Self> {
        let (rows, cols) = m.dims();
        if rows < cols || cols == 0 {
            return Err(Error::Index(format!("cannot split a {rows}x{cols} matrix")));
        }
        let jp = rows - cols;
        let upper = m.row_range(0, cols - 1)?;
        let lower = m.row_range(cols - 1, rows)?;
        let factors: Vec<Rational> = (0..jp)
            .map(|r| Rational::from_integer(((jp - r) as i64).into()))
            .collect();
        let scaled_lower = lower.scale_rows(&factors);
        Ok(BlockSplit {
            upper,
            lower,
            scaled_lower,
        })
    }
}

/// `M^(k,j)` together with the parent blocks it was assembled from
/// (absent for `k = 1`, where the matrix is the classical `N^(j)`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecSubresMatrix {
    pub k: usize,
    pub j: usize,
    pub matrix: ExactMatrix,
    pub parent: Option<Arc<BlockSplit>>,
}

impl RecSubresMatrix {
    /// Diagonal `M_U` copies, `M_L` copies and `M_L'` copies.
    pub fn block_counts(&self, rp: &RecursivePrs) -> Option<(usize, usize, usize)> {
        (self.k >= 2).then(|| {
            let jp = rp.j(self.k - 1);
            (2 * jp - 2 * self.j - 1, jp - self.j - 1, jp - self.j)
        })
    }
}

/// Closed-form `(rows, cols)` of `M^(k,j)` with no range checks.
fn dims_unchecked(m: usize, n: usize, j_values: &[usize], k: usize, j: usize) -> (usize, usize) {
    if k == 1 {
        return (m + n - j, m + n - 2 * j);
    }
    let mut cols = m + n - 2 * j_values[1];
    for l in 2..k {
        cols *= 2 * j_values[l - 1] - 2 * j_values[l] - 1;
    }
    cols *= 2 * j_values[k - 1] - 2 * j - 1;
    (cols + j, cols)
}

/// Rows and columns of `M^(k,j)`: `(m+n-j, m+n-2j)` at `k = 1`, otherwise
/// `(m+n-2j_1) * prod_{l=2}^{k-1}(2j_{l-1}-2j_l-1) * (2j_{k-1}-2j-1)`
/// columns and `j` more rows.
pub fn rec_subres_dims(
    m: usize,
    n: usize,
    j_values: &[usize],
    k: usize,
    j: usize,
) -> Result<(usize, usize)> {
    if k == 0 || j_values.len() < k {
        return Err(Error::Range(format!(
            "level k = {k} needs j_0 .. j_{} (have {} values)",
            k.saturating_sub(1),
            j_values.len()
        )));
    }
    if j_values.windows(2).any(|w| w[1] >= w[0]) || j_values[0] != m || n == 0 || n >= m {
        return Err(Error::Range(format!(
            "j values {j_values:?} must start at m = {m} and strictly decrease, with 0 < n < m"
        )));
    }
    let top = if k == 1 { n } else { j_values[k - 1] - 1 };
    if j >= top {
        return Err(Error::Range(format!("j = {j} must be below {top} at level {k}")));
    }
    Ok(dims_unchecked(m, n, j_values, k, j))
}

/// Builds recursive subresultant matrices for one recursive PRS, caching
/// the block split of each `M^(k, j_k)` so every level-`k+1` matrix reuses
/// it. The cache is filled at most once per level even under concurrent
/// use.
pub struct RecSubresBuilder<'a> {
    rp: &'a RecursivePrs,
    splits: Vec<OnceLock<Result<Arc<BlockSplit>>>>,
}

impl<'a> RecSubresBuilder<'a> {
    pub fn new(rp: &'a RecursivePrs) -> Self {
        RecSubresBuilder {
            rp,
            splits: (0..rp.depth()).map(|_| OnceLock::new()).collect(),
        }
    }

    pub fn rp(&self) -> &RecursivePrs {
        self.rp
    }

    /// Largest valid `j` plus one at level `k`, i.e. `deg P_2^(k)`.
    pub fn j_limit(&self, k: usize) -> usize {
        self.rp.level(k).degree_at(2)
    }

    fn check_range(&self, k: usize, j: usize) -> Result<()> {
        let t = self.rp.depth();
        if k == 0 || k > t {
            return Err(Error::Range(format!("level k = {k} outside 1..={t}")));
        }
        let limit = self.j_limit(k);
        if j >= limit {
            return Err(Error::Range(format!(
                "j = {j} outside 0..{limit} at level {k}"
            )));
        }
        Ok(())
    }

    /// Every valid `(k, j)` pair, level by level, `j` ascending.
    pub fn valid_pairs(&self) -> Vec<(usize, usize)> {
        (1..=self.rp.depth())
            .flat_map(|k| (0..self.j_limit(k)).map(move |j| (k, j)))
            .collect()
    }

    /// Split of `M^(k, j_k)`, built on first use.
    fn split(&self, k: usize) -> Result<Arc<BlockSplit>> {
        self.splits[k - 1]
            .get_or_init(|| {
                let m = self.raw(k, self.rp.j(k))?;
                BlockSplit::of(&m.matrix).map(Arc::new)
            })
            .clone()
    }

    /// `M^(k,j)` without the public range check; `j` may be as large as
    /// `j_{k-1} - 1` (or `n` at `k = 1`), which the parent of a two-element
    /// level needs.
    fn raw(&self, k: usize, j: usize) -> Result<RecSubresMatrix> {
        let rp = self.rp;
        let expected = dims_unchecked(rp.m(), rp.n(), &rp.j_values, k, j);
        let (matrix, parent) = if k == 1 {
            (coefficient_layout(rp.f(), rp.g(), j), None)
        } else {
            let split = self.split(k - 1)?;
            let jp = rp.j(k - 1);
            let u = split.upper.cols();
            let blocks = 2 * jp - 2 * j - 1;
            let plain = jp - j - 1;
            let mut spec = BlockSpec::new(expected.0, expected.1);
            for b in 0..blocks {
                spec.place(&split.upper, b * (u - 1), b * u);
            }
            let base = blocks * (u - 1);
            for b in 0..blocks {
                // each staircase starts at the top of the lower container
                let (block, offset) = if b < plain {
                    (&split.lower, b)
                } else {
                    (&split.scaled_lower, b - plain)
                };
                spec.place(block, base + offset, b * u);
            }
            (assemble(&spec)?, Some(split.clone()))
        };
        if matrix.dims() != expected {
            return Err(Error::DimensionMismatch {
                actual: matrix.dims(),
                expected,
            });
        }
        Ok(RecSubresMatrix {
            k,
            j,
            matrix,
            parent,
        })
    }

    pub fn matrix(&self, k: usize, j: usize) -> Result<RecSubresMatrix> {
        self.check_range(k, j)?;
        self.raw(k, j)
    }

    pub fn rec_subresultant(&self, k: usize, j: usize, exec: Execution) -> Result<Polynomial> {
        minor_polynomial(&self.matrix(k, j)?.matrix, exec)
    }

    /// Column count of `M^(k, j_k)`.
    fn parent_columns(&self, k: usize) -> usize {
        let rp = self.rp;
        dims_unchecked(rp.m(), rp.n(), &rp.j_values, k, rp.j(k)).1
    }

    /// `B_k`: the factor with `S_{j_k}(P_1^(k), P_2^(k)) = B_k * P_{l_k}^(k)`.
    fn level_factor(&self, k: usize) -> Rational {
        let level = self.rp.level(k);
        fundamental_factor(level, level.len(), FactorAt::Degree)
    }

    /// `R_{k,j}` without range checks.
    fn similarity_raw(&self, k: usize, j: usize) -> Rational {
        if k == 1 {
            return Rational::from_integer(1.into());
        }
        let jp = self.rp.j(k - 1);
        let blocks = (2 * jp - 2 * j - 1) as i64;
        let sign = self.sign(k, blocks);
        let inner = self.similarity_raw(k - 1, jp) * self.level_factor(k - 1);
        pow(&inner, blocks) * sign
    }

    /// `r_{k,j} = (-1)^((u_{k-1} - 1) * b (b - 1) / 2)`.
    fn sign(&self, k: usize, blocks: i64) -> Rational {
        let u_prev = self.parent_columns(k - 1) as i64;
        sign_power((u_prev - 1) * (blocks * (blocks - 1) / 2))
    }

    pub fn similarity_factors(&self, k: usize, j: usize) -> Result<SimilarityFactors> {
        self.check_range(k, j)?;
        let rp = self.rp;
        let jp = rp.j(k - 1);
        let blocks = (2 * jp - 2 * j - 1) as i64;
        let sign = if k == 1 {
            Rational::from_integer(1.into())
        } else {
            self.sign(k, blocks)
        };
        Ok(SimilarityFactors {
            columns: dims_unchecked(rp.m(), rp.n(), &rp.j_values, k, j).1,
            level_factor: self.level_factor(k),
            blocks,
            sign,
            similarity: self.similarity_raw(k, j),
        })
    }

    pub fn verify_lemma1(&self, k: usize, j: usize, exec: Execution) -> Result<VerificationReport> {
        let lhs = self.rec_subresultant(k, j, exec)?;
        let factors = self.similarity_factors(k, j)?;
        let level = self.rp.level(k);
        let classical = subresultant(level.element(1), level.element(2), j)?;
        let rhs = classical.scale(&factors.similarity);
        let mut report = VerificationReport::new(format!("similarity identity at (k, j) = ({k}, {j})"));
        report.checks.push(ClauseCheck::new(
            Clause::Similarity,
            k,
            j,
            lhs,
            rhs,
            Some(factors.similarity),
        ));
        Ok(report)
    }

    /// Every valid `(k, j)`, fanned out over `exec`.
    pub fn verify_lemma1_all(&self, exec: Execution) -> Result<VerificationReport> {
        let pairs = self.valid_pairs();
        let parts = exec.map(&pairs, |&(k, j)| self.verify_lemma1(k, j, Execution::Sequential));
        let mut report = VerificationReport::new("similarity identity, all (k, j)");
        for part in parts {
            report.merge(part?);
        }
        Ok(report)
    }

    /// Every clause of the recursive fundamental theorem at level `k`.
    pub fn verify_theorem2(&self, k: usize, exec: Execution) -> Result<VerificationReport> {
        if k == 0 || k > self.rp.depth() {
            return Err(Error::Range(format!(
                "level k = {k} outside 1..={}",
                self.rp.depth()
            )));
        }
        let chain = exec
            .map_range(0..self.j_limit(k), |j| {
                self.rec_subresultant(k, j, Execution::Sequential)
            })
            .into_iter()
            .collect::<Result<Vec<_>>>()?;
        let mut report = VerificationReport::new(format!("recursive fundamental theorem at level {k}"));
        report.checks = fundamental_checks(self.rp.level(k), k, &chain, |j| {
            self.similarity_raw(k, j)
        });
        Ok(report)
    }

    pub fn verify_theorem2_all(&self, exec: Execution) -> Result<VerificationReport> {
        let mut report = VerificationReport::new("recursive fundamental theorem, all levels");
        for k in 1..=self.rp.depth() {
            report.merge(self.verify_theorem2(k, exec)?);
        }
        Ok(report)
    }
}

/// Scalars relating recursive and classical subresultants at `(k, j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimilarityFactors {
    /// `u_{k,j}`, the column count of `M^(k,j)`.
    pub columns: usize,
    /// `B_k`.
    pub level_factor: Rational,
    /// `b_{k,j} = 2 j_{k-1} - 2 j - 1`.
    pub blocks: i64,
    /// `r_{k,j}`, always `+1` at `k = 1`.
    pub sign: Rational,
    /// `R_{k,j}`.
    pub similarity: Rational,
}

pub fn rec_subres_matrix(rp: &RecursivePrs, k: usize, j: usize) -> Result<RecSubresMatrix> {
    RecSubresBuilder::new(rp).matrix(k, j)
}

pub fn rec_subresultant(rp: &RecursivePrs, k: usize, j: usize) -> Result<Polynomial> {
    RecSubresBuilder::new(rp).rec_subresultant(k, j, Execution::default())
}

pub fn similarity_factors(rp: &RecursivePrs, k: usize, j: usize) -> Result<SimilarityFactors> {
    RecSubresBuilder::new(rp).similarity_factors(k, j)
}

pub fn verify_lemma1(rp: &RecursivePrs, k: usize, j: usize) -> Result<VerificationReport> {
    RecSubresBuilder::new(rp).verify_lemma1(k, j, Execution::default())
}

pub fn verify_theorem2(rp: &RecursivePrs, k: usize) -> Result<VerificationReport> {
    RecSubresBuilder::new(rp).verify_theorem2(k, Execution::default())
}
