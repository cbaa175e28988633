//! Real-root counting with multiplicity from a recursive Sturm sequence.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::prs::{recursive_sturm, DivisionRule, PrsLevel, RecursivePrs};
use crate::rational::{sign_power, Rational};

/// Number of adjacent sign changes in a sequence of nonzero rationals.
pub fn sign_variations(seq: &[Rational]) -> Result<usize> {
    if let Some(i) = seq.iter().position(|r| r.is_zero()) {
        return Err(Error::ZeroEntry(i));
    }
    Ok(seq
        .windows(2)
        .filter(|w| w[0].is_positive() != w[1].is_positive())
        .count())
}

/// Signs of a PRS level at `-inf` and `+inf`, read off leading
/// coefficients and degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaPair {
    pub at_minus_inf: Vec<Rational>,
    pub at_plus_inf: Vec<Rational>,
}

impl LambdaPair {
    /// `V(at -inf) - V(at +inf)`.
    pub fn variation_drop(&self) -> i64 {
        let minus = sign_variations(&self.at_minus_inf).expect("leading coefficients are nonzero");
        let plus = sign_variations(&self.at_plus_inf).expect("leading coefficients are nonzero");
        minus as i64 - plus as i64
    }
}

pub fn lambda_pair(level: &PrsLevel) -> LambdaPair {
    let at_plus_inf: Vec<Rational> = level.leading_coeffs.clone();
    let at_minus_inf = at_plus_inf
        .iter()
        .zip(&level.degrees)
        .map(|(c, &d)| c * sign_power(d as i64))
        .collect();
    LambdaPair {
        at_minus_inf,
        at_plus_inf,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootCount {
    pub total: i64,
    pub per_level: Vec<i64>,
}

/// Sums the per-level variation drops of a recursive Sturm sequence.
/// Other division rules rescale by arbitrary-sign `beta` and are refused.
pub fn count_from_rprs(rp: &RecursivePrs) -> Result<RootCount> {
    if rp.rule != DivisionRule::Sturm {
        return Err(Error::InvalidRule(format!(
            "root counting needs the sturm rule, got `{}`",
            rp.rule
        )));
    }
    let per_level: Vec<i64> = rp
        .levels
        .iter()
        .map(|l| lambda_pair(l).variation_drop())
        .collect();
    Ok(RootCount {
        total: per_level.iter().sum(),
        per_level,
    })
}

/// Number of real roots of `p` counted with multiplicity.
pub fn count_real_roots_with_multiplicity(p: &Polynomial) -> Result<RootCount> {
    count_from_rprs(&recursive_sturm(p)?)
}
