//! Verification reports: data rather than assertions, so callers can print
//! counterexamples.

use std::fmt;

use crate::poly::Polynomial;
use crate::rational::Rational;

/// Which identity a single check exercises.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Clause {
    /// Subresultant vanishes below the degree of the last PRS element.
    ZeroBelowLast,
    /// Value at `j = n_i`, proportional to `P_i`.
    AtDegree { i: usize },
    /// Vanishes strictly between `n_i` and `n_{i-1} - 1`.
    ZeroInGap { i: usize },
    /// Value at `j = n_{i-1} - 1`, proportional to `P_i`.
    BelowPrevious { i: usize },
    /// Recursive subresultant equals the similarity factor times the
    /// classical subresultant of the level's first two elements.
    Similarity,
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Clause::ZeroBelowLast => write!(f, "zero below deg(last)"),
            Clause::AtDegree { i } => write!(f, "value at n_{i}"),
            Clause::ZeroInGap { i } => write!(f, "zero in gap of P_{i}"),
            Clause::BelowPrevious { i } => write!(f, "value at n_{}-1", i - 1),
            Clause::Similarity => write!(f, "similarity"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClauseCheck {
    pub clause: Clause,
    /// Level of a recursive PRS; 1 for classical checks.
    pub k: usize,
    pub j: usize,
    pub lhs: Polynomial,
    pub rhs: Polynomial,
    pub factor: Option<Rational>,
    pub pass: bool,
}

impl ClauseCheck {
    pub fn new(
        clause: Clause,
        k: usize,
        j: usize,
        lhs: Polynomial,
        rhs: Polynomial,
        factor: Option<Rational>,
    ) -> Self {
        let pass = lhs == rhs;
        ClauseCheck {
            clause,
            k,
            j,
            lhs,
            rhs,
            factor,
            pass,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub claim: String,
    pub checks: Vec<ClauseCheck>,
}

impl VerificationReport {
    pub fn new(claim: impl Into<String>) -> Self {
        VerificationReport {
            claim: claim.into(),
            checks: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ClauseCheck> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn merge(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let failed = self.failures().count();
        writeln!(
            f,
            "{}: {} ({} checks, {} failed)",
            self.claim,
            if self.passed() { "PASS" } else { "FAIL" },
            self.checks.len(),
            failed
        )?;
        for c in &self.checks {
            write!(
                f,
                "  [{}] k={} j={} {}",
                if c.pass { "ok" } else { "FAIL" },
                c.k,
                c.j,
                c.clause
            )?;
            if let Some(factor) = &c.factor {
                write!(f, " factor={factor}")?;
            }
            writeln!(f)?;
            if !c.pass {
                writeln!(f, "      lhs = {}", c.lhs)?;
                writeln!(f, "      rhs = {}", c.rhs)?;
            }
        }
        Ok(())
    }
}
