//! Sylvester and subresultant matrices, subresultant polynomials, and the
//! factor formulas of the fundamental theorem of subresultants.

use crate::error::{Error, Result};
use crate::linalg::{minor_polynomial, ExactMatrix};
use crate::par::Execution;
use crate::poly::Polynomial;
use crate::prs::{prs, DivisionRule, PrsLevel};
use crate::rational::{pow, sign_power, Rational};
use crate::report::{Clause, ClauseCheck, VerificationReport};

fn degrees(f: &Polynomial, g: &Polynomial) -> Result<(usize, usize)> {
    match (f.degree(), g.degree()) {
        (Some(m), Some(n)) if m >= n && n >= 1 => Ok((m, n)),
        (m, n) => {
            let show = |d: Option<usize>| d.map_or("-inf".to_string(), |d| d.to_string());
            Err(Error::DegreeOrder(format!(
                "need deg(F) >= deg(G) >= 1, got {} and {}",
                show(m),
                show(n)
            )))
        }
    }
}

/// Layout shared by the Sylvester and subresultant matrices: `n - j`
/// shifted columns of `f` (leading coefficient on top) followed by `m - j`
/// shifted columns of `g`. Accepts `j == n`, which leaves only `g` columns.
pub(crate) fn coefficient_layout(f: &Polynomial, g: &Polynomial, j: usize) -> ExactMatrix {
    let m = f.degree().unwrap();
    let n = g.degree().unwrap();
    let rows = m + n - j;
    let cols = m + n - 2 * j;
    let mut grid = vec![vec![Rational::from_integer(0.into()); cols]; rows];
    for c in 0..n - j {
        for t in 0..=m {
            grid[c + t][c] = f.coeff(m - t);
        }
    }
    for c in 0..m - j {
        for t in 0..=n {
            grid[c + t][n - j + c] = g.coeff(n - t);
        }
    }
    ExactMatrix::from_rows(grid).expect("rectangular by construction")
}

/// The `(m+n) x (m+n)` Sylvester matrix.
pub fn sylvester_matrix(f: &Polynomial, g: &Polynomial) -> Result<ExactMatrix> {
    degrees(f, g)?;
    Ok(coefficient_layout(f, g, 0))
}

/// The `j`-th subresultant matrix, `(m+n-j) x (m+n-2j)`, for `0 <= j < n`.
pub fn subres_matrix(f: &Polynomial, g: &Polynomial, j: usize) -> Result<ExactMatrix> {
    let (_, n) = degrees(f, g)?;
    if j >= n {
        return Err(Error::Index(format!("subresultant index j = {j} needs j < {n}")));
    }
    Ok(coefficient_layout(f, g, j))
}

pub fn subresultant(f: &Polynomial, g: &Polynomial, j: usize) -> Result<Polynomial> {
    subresultant_with(f, g, j, Execution::default())
}

pub fn subresultant_with(
    f: &Polynomial,
    g: &Polynomial,
    j: usize,
    exec: Execution,
) -> Result<Polynomial> {
    minor_polynomial(&subres_matrix(f, g, j)?, exec)
}

/// All subresultants `S_0 .. S_{n-1}` of a pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubresChain {
    pub f: Polynomial,
    pub g: Polynomial,
    /// `entries[j]` is `S_j`.
    pub entries: Vec<Polynomial>,
}

pub fn subresultant_chain(f: &Polynomial, g: &Polynomial, exec: Execution) -> Result<SubresChain> {
    let (_, n) = degrees(f, g)?;
    let entries = exec
        .map_range(0..n, |j| subresultant_with(f, g, j, Execution::Sequential))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    Ok(SubresChain {
        f: f.clone(),
        g: g.clone(),
        entries,
    })
}

/// Which of the two proportionality formulas to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorAt {
    /// `S_{n_i} = factor * P_i`.
    Degree,
    /// `S_{n_{i-1}-1} = factor * P_i`.
    BelowPrevious,
}

/// Factor `c` with `S_j(P_1, P_2) = c * P_i`, for `j = n_i` or
/// `j = n_{i-1} - 1`. `i` is 1-based and at least 2; with `i = 2` only
/// [`FactorAt::Degree`] is meaningful and the product is empty.
pub(crate) fn fundamental_factor(level: &PrsLevel, i: usize, at: FactorAt) -> Rational {
    let n = |t: usize| level.degree_at(t) as i64;
    let c = |t: usize| level.lc_at(t);
    let d = |t: usize| level.gap_at(t) as i64;
    let target = match at {
        FactorAt::Degree => n(i),
        FactorAt::BelowPrevious => n(i - 1) - 1,
    };
    let mut factor = match at {
        FactorAt::Degree => pow(c(i), d(i - 1) - 1),
        FactorAt::BelowPrevious => pow(c(i - 1), 1 - d(i - 1)),
    };
    for l in 3..=i {
        let ratio = level.beta_at(l) / level.alpha_at(l);
        let gaps = d(l - 2) + d(l - 1);
        factor *= pow(&ratio, n(l - 1) - target)
            * pow(c(l - 1), gaps)
            * sign_power((n(l - 2) - target) * (n(l - 1) - target));
    }
    factor
}

/// Scalar multiplying `P_i` in the fundamental theorem, `3 <= i <= l`.
pub fn theorem1_factor(level: &PrsLevel, i: usize, at: FactorAt) -> Result<Rational> {
    if i < 3 || i > level.len() {
        return Err(Error::Index(format!(
            "element index {i} outside 3..={}",
            level.len()
        )));
    }
    Ok(fundamental_factor(level, i, at))
}

/// Checks, against a PRS `level` of the pair and its subresultants
/// `chain[j]`, every clause of the fundamental theorem for every `j`.
/// `level_no` and `scale` let the recursive variant reuse this with
/// `R_{k,j}` multiplied into the right-hand sides.
pub(crate) fn fundamental_checks(
    level: &PrsLevel,
    level_no: usize,
    chain: &[Polynomial],
    scale: impl Fn(usize) -> Rational,
) -> Vec<ClauseCheck> {
    let l = level.len();
    let last_deg = level.degree_at(l);
    let zero = Polynomial::zero();
    let mut checks = Vec::new();
    for (j, s) in chain.iter().enumerate() {
        if j < last_deg {
            checks.push(ClauseCheck::new(
                Clause::ZeroBelowLast,
                level_no,
                j,
                s.clone(),
                zero.clone(),
                None,
            ));
            continue;
        }
        for i in 3..=l {
            let (ni, nprev) = (level.degree_at(i), level.degree_at(i - 1));
            if j == ni {
                let f = fundamental_factor(level, i, FactorAt::Degree) * scale(j);
                checks.push(ClauseCheck::new(
                    Clause::AtDegree { i },
                    level_no,
                    j,
                    s.clone(),
                    level.element(i).scale(&f),
                    Some(f),
                ));
            }
            if ni < j && j + 1 < nprev {
                checks.push(ClauseCheck::new(
                    Clause::ZeroInGap { i },
                    level_no,
                    j,
                    s.clone(),
                    zero.clone(),
                    None,
                ));
            }
            if j + 1 == nprev {
                let f = fundamental_factor(level, i, FactorAt::BelowPrevious) * scale(j);
                checks.push(ClauseCheck::new(
                    Clause::BelowPrevious { i },
                    level_no,
                    j,
                    s.clone(),
                    level.element(i).scale(&f),
                    Some(f),
                ));
            }
        }
    }
    checks
}

/// Computes the PRS of `(f, g)` under `rule` and every `S_j`, then checks
/// each `j` against the clause of the fundamental theorem covering it.
pub fn verify_fundamental_theorem(
    f: &Polynomial,
    g: &Polynomial,
    rule: &DivisionRule,
) -> Result<VerificationReport> {
    verify_fundamental_theorem_with(f, g, rule, Execution::default())
}

pub fn verify_fundamental_theorem_with(
    f: &Polynomial,
    g: &Polynomial,
    rule: &DivisionRule,
    exec: Execution,
) -> Result<VerificationReport> {
    let level = prs(f, g, rule)?;
    degrees(f, g)?;
    let chain = subresultant_chain(f, g, exec)?;
    let mut report = VerificationReport::new(format!("fundamental theorem ({rule} rule)"));
    report.checks = fundamental_checks(&level, 1, &chain.entries, |_| Rational::from_integer(1.into()));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::determinant;
    use crate::rational::int;

    fn example_p() -> Polynomial {
        let a = Polynomial::from_ints(&[2, 1]);
        let b = Polynomial::from_ints(&[-3, 1]);
        let c = Polynomial::from_ints(&[1, 1]);
        a.pow(2) * (b * c).pow(3)
    }

    #[test]
    fn sylvester_shapes_and_resultants() {
        let s = sylvester_matrix(
            &Polynomial::from_ints(&[-1, 0, 1]),
            &Polynomial::from_ints(&[-1, 1]),
        )
        .unwrap();
        assert_eq!(s.dims(), (3, 3));
        assert_eq!(determinant(&s).unwrap(), int(0));

        // x^2 + 1 against x: g evaluated at the roots +-i multiplies to 1.
        let s = sylvester_matrix(&Polynomial::from_ints(&[1, 0, 1]), &Polynomial::x()).unwrap();
        assert_eq!(determinant(&s).unwrap(), int(1));
    }

    #[test]
    fn sylvester_column_split() {
        let f = Polynomial::from_ints(&[1, 2, 3, 4]);
        let g = Polynomial::from_ints(&[5, 6]);
        let s = sylvester_matrix(&f, &g).unwrap();
        assert_eq!(s.dims(), (4, 4));
        // one F column (n = 1), then three G columns (m = 3)
        assert_eq!(s.get(0, 0), &int(4));
        assert_eq!(s.get(3, 0), &int(1));
        for c in 1..4 {
            assert_eq!(s.get(c - 1, c), &int(6));
            assert_eq!(s.get(c, c), &int(5));
        }
    }

    #[test]
    fn subres_matrix_shapes() {
        let f = example_p();
        let g = f.derivative();
        let top = subres_matrix(&f, &g, 6).unwrap();
        assert_eq!(top.dims(), (9, 3));
        for j in 0..7 {
            let (r, c) = subres_matrix(&f, &g, j).unwrap().dims();
            assert_eq!((r, c), (15 - j, 15 - 2 * j));
        }
        assert!(matches!(subres_matrix(&f, &g, 7), Err(Error::Index(_))));
    }

    #[test]
    fn subresultants_vanish_below_gcd_degree() {
        let h = Polynomial::from_ints(&[1, 1, 1]);
        let f = &h * &Polynomial::from_ints(&[3, 0, -1, 2]);
        let g = &h * &Polynomial::from_ints(&[1, 4, 1]);
        assert!(subresultant(&f, &g, 0).unwrap().is_zero());
        assert!(subresultant(&f, &g, 1).unwrap().is_zero());
        assert!(!subresultant(&f, &g, 2).unwrap().is_zero());
    }

    #[test]
    fn top_subresultant_matches_first_remainder() {
        let f = Polynomial::from_ints(&[1, -2, 0, 3, 1, 2]);
        let g = Polynomial::from_ints(&[-1, 1, 4, 0, 3]);
        let level = prs(&f, &g, &DivisionRule::Sturm).unwrap();
        let s3 = subresultant(&f, &g, 3).unwrap();
        let factor = theorem1_factor(&level, 3, FactorAt::BelowPrevious).unwrap();
        assert_eq!(s3, level.element(3).scale(&factor));
        assert_eq!(s3.ratio_to(level.element(3)), Some(factor));
    }

    #[test]
    fn sturm_factor_is_signed_lc_product() {
        let f = example_p();
        let level = prs(&f, &f.derivative(), &DivisionRule::Sturm).unwrap();
        // i = 3: (-1)^(n_2-n_3) c_2^(d_1+d_2) (-1)^((n_1-n_3)(n_2-n_3)) = -64
        assert_eq!(theorem1_factor(&level, 3, FactorAt::Degree).unwrap(), int(-64));
        assert!(theorem1_factor(&level, 2, FactorAt::Degree).is_err());
        assert!(theorem1_factor(&level, 5, FactorAt::Degree).is_err());
    }

    #[test]
    fn example_passes_every_rule() {
        let f = example_p();
        let g = f.derivative();
        for rule in DivisionRule::BUILTIN {
            let report = verify_fundamental_theorem(&f, &g, &rule).unwrap();
            assert!(report.passed(), "{report}");
            assert_eq!(
                report.checks.iter().filter(|c| c.clause == Clause::ZeroBelowLast).count(),
                5
            );
        }
    }

    #[test]
    fn coprime_pair_has_nonzero_resultant() {
        let f = Polynomial::from_ints(&[1, 0, 2, 1]);
        let g = Polynomial::from_ints(&[3, 1, 1]);
        let report = verify_fundamental_theorem(&f, &g, &DivisionRule::Sturm).unwrap();
        assert!(report.passed());
        assert!(report.checks.iter().all(|c| c.clause != Clause::ZeroBelowLast));
        assert!(!subresultant(&f, &g, 0).unwrap().is_zero());
    }
}
