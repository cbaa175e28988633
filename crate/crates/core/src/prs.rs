//! Polynomial remainder sequences, recursive PRS and recursive Sturm
//! sequences under pluggable division rules.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{self, remainder_step, Polynomial};
use crate::rational::{pow, sign_power, Rational};

/// Policy choosing the scalar pair `(alpha_i, beta_i)` of each remainder step
/// `alpha_i * P_{i-2} = q_{i-1} * P_{i-1} + beta_i * P_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DivisionRule {
    /// `(1, -1)` at every step.
    Sturm,
    /// `alpha = 1`, `beta` = leading coefficient of the remainder, so every
    /// new element is monic.
    MonicEuclid,
    /// Pseudo-division (`alpha = lc(P_{i-1})^(d_{i-2}+1)`) followed by
    /// division by the signed content, so every new element is primitive.
    Primitive,
    /// Brown–Traub subresultant PRS.
    SubresultantPrs,
    /// Caller-supplied pairs, consumed in order (across levels for a
    /// recursive PRS). The count must match the number of remainder steps.
    Explicit(Vec<(Rational, Rational)>),
}

impl DivisionRule {
    pub const BUILTIN: [DivisionRule; 4] = [
        DivisionRule::Sturm,
        DivisionRule::MonicEuclid,
        DivisionRule::Primitive,
        DivisionRule::SubresultantPrs,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            DivisionRule::Sturm => "sturm",
            DivisionRule::MonicEuclid => "monic",
            DivisionRule::Primitive => "primitive",
            DivisionRule::SubresultantPrs => "subresultant",
            DivisionRule::Explicit(_) => "explicit",
        }
    }
}

impl fmt::Display for DivisionRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for DivisionRule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sturm" => Ok(DivisionRule::Sturm),
            "monic" => Ok(DivisionRule::MonicEuclid),
            "primitive" => Ok(DivisionRule::Primitive),
            "subresultant" => Ok(DivisionRule::SubresultantPrs),
            other => Err(Error::InvalidRule(format!("unknown rule `{other}`"))),
        }
    }
}

/// Per-sequence state of a division rule.
struct RuleCursor<'a> {
    rule: &'a DivisionRule,
    explicit_pos: usize,
    // Brown–Traub psi of the previous step.
    psi: Rational,
}

impl<'a> RuleCursor<'a> {
    fn new(rule: &'a DivisionRule) -> Self {
        RuleCursor {
            rule,
            explicit_pos: 0,
            psi: -Rational::one(),
        }
    }

    fn start_level(&mut self) {
        self.psi = -Rational::one();
    }

    /// `alpha` for the step producing `P_{s+1}` from `elems = [P_1 .. P_s]`.
    fn alpha(&self, elems: &[Polynomial]) -> Result<Rational> {
        let s = elems.len();
        let prev = &elems[s - 2];
        let cur = &elems[s - 1];
        let gap = (prev.degree().unwrap() - cur.degree().unwrap()) as i64;
        let lc = cur.leading_coeff().unwrap();
        Ok(match self.rule {
            DivisionRule::Sturm | DivisionRule::MonicEuclid => Rational::one(),
            DivisionRule::Primitive | DivisionRule::SubresultantPrs => pow(lc, gap + 1),
            DivisionRule::Explicit(pairs) => pairs
                .get(self.explicit_pos)
                .map(|p| p.0.clone())
                .ok_or_else(|| {
                    Error::InvalidRule(format!(
                        "explicit rule exhausted after {} pairs",
                        self.explicit_pos
                    ))
                })?,
        })
    }

    /// `beta` for the same step, given the nonzero remainder
    /// `alpha * P_{s-1} - q * P_s`.
    fn beta(&mut self, elems: &[Polynomial], remainder: &Polynomial) -> Result<Rational> {
        let s = elems.len();
        Ok(match self.rule {
            DivisionRule::Sturm => -Rational::one(),
            DivisionRule::MonicEuclid => remainder.leading_coeff().unwrap().clone(),
            DivisionRule::Primitive => remainder.content_primitive()?.0,
            DivisionRule::SubresultantPrs => {
                let deg = |i: usize| elems[i].degree().unwrap() as i64;
                if s == 2 {
                    self.psi = -Rational::one();
                    sign_power(deg(0) - deg(1) + 1)
                } else {
                    // 0-based: elems[s-2] is P_{s-1}, whose leading
                    // coefficient enters the recurrence.
                    let gap_prev = deg(s - 3) - deg(s - 2);
                    let gap_cur = deg(s - 2) - deg(s - 1);
                    let neg_lc = -elems[s - 2].leading_coeff().unwrap().clone();
                    self.psi = pow(&neg_lc, gap_prev) * pow(&self.psi, 1 - gap_prev);
                    neg_lc * pow(&self.psi, gap_cur)
                }
            }
            DivisionRule::Explicit(pairs) => {
                let b = pairs[self.explicit_pos].1.clone();
                self.explicit_pos += 1;
                b
            }
        })
    }

    fn finish(&self) -> Result<()> {
        if let DivisionRule::Explicit(pairs) = self.rule {
            if self.explicit_pos != pairs.len() {
                return Err(Error::InvalidRule(format!(
                    "explicit rule has {} pairs but the sequence used {}",
                    pairs.len(),
                    self.explicit_pos
                )));
            }
        }
        Ok(())
    }
}

/// One complete PRS `(P_1, ..., P_l)` with its bookkeeping.
///
/// Vectors are stored 0-based; the `*_at` accessors take the 1-based
/// element index `i` used in the usual PRS notation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrsLevel {
    pub elements: Vec<Polynomial>,
    /// `alphas[0]` is `alpha_3`.
    pub alphas: Vec<Rational>,
    pub betas: Vec<Rational>,
    /// `quotients[0]` is `q_2`, the quotient of the step producing `P_3`.
    pub quotients: Vec<Polynomial>,
    pub degrees: Vec<usize>,
    pub leading_coeffs: Vec<Rational>,
    /// `degree_gaps[0]` is `d_1 = n_1 - n_2`.
    pub degree_gaps: Vec<usize>,
}

impl PrsLevel {
    /// Number of elements `l`.
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn element(&self, i: usize) -> &Polynomial {
        &self.elements[i - 1]
    }

    pub fn last(&self) -> &Polynomial {
        self.elements.last().expect("PRS has at least two elements")
    }

    /// `n_i`.
    pub fn degree_at(&self, i: usize) -> usize {
        self.degrees[i - 1]
    }

    /// `c_i`.
    pub fn lc_at(&self, i: usize) -> &Rational {
        &self.leading_coeffs[i - 1]
    }

    /// `d_i = n_i - n_{i+1}` for `1 <= i < l`.
    pub fn gap_at(&self, i: usize) -> usize {
        self.degree_gaps[i - 1]
    }

    /// `alpha_i` for `3 <= i <= l`.
    pub fn alpha_at(&self, i: usize) -> &Rational {
        &self.alphas[i - 3]
    }

    pub fn beta_at(&self, i: usize) -> &Rational {
        &self.betas[i - 3]
    }

    /// Checks `alpha_i P_{i-2} = q_{i-1} P_{i-1} + beta_i P_i` for every step.
    pub fn identities_hold(&self) -> bool {
        (3..=self.len()).all(|i| {
            let lhs = self.element(i - 2).scale(self.alpha_at(i));
            let rhs = &self.quotients[i - 3] * self.element(i - 1)
                + self.element(i).scale(self.beta_at(i));
            lhs == rhs
        })
    }
}

fn prs_with(f: &Polynomial, g: &Polynomial, cursor: &mut RuleCursor) -> Result<PrsLevel> {
    let (Some(m), Some(n)) = (f.degree(), g.degree()) else {
        return Err(Error::ZeroPolynomial);
    };
    if m <= n {
        return Err(Error::DegreeOrder(format!(
            "a PRS needs deg(F) > deg(G), got {m} <= {n}"
        )));
    }
    cursor.start_level();
    let mut elements = vec![f.clone(), g.clone()];
    let (mut alphas, mut betas, mut quotients) = (vec![], vec![], vec![]);
    loop {
        let s = elements.len();
        if elements[s - 1].is_constant() {
            break;
        }
        let alpha = match cursor.alpha(&elements) {
            Ok(a) => a,
            Err(e) => {
                // an exhausted explicit rule is fine if no step is left
                let probe = remainder_step(&elements[s - 2], &elements[s - 1], &Rational::one(), &Rational::one())?;
                if probe.next.is_zero() {
                    break;
                }
                return Err(e);
            }
        };
        if alpha.is_zero() {
            return Err(Error::InvalidRule(format!(
                "rule `{}` produced alpha = 0 at step {}",
                cursor.rule,
                s + 1
            )));
        }
        let step = remainder_step(&elements[s - 2], &elements[s - 1], &alpha, &Rational::one())?;
        if step.next.is_zero() {
            break;
        }
        let beta = cursor.beta(&elements, &step.next)?;
        if beta.is_zero() {
            return Err(Error::InvalidRule(format!(
                "rule `{}` produced beta = 0 at step {}",
                cursor.rule,
                s + 1
            )));
        }
        elements.push(step.next.scale(&beta.recip()));
        alphas.push(alpha);
        betas.push(beta);
        quotients.push(step.quotient);
    }
    let degrees: Vec<usize> = elements.iter().map(|p| p.degree().unwrap()).collect();
    let leading_coeffs = elements
        .iter()
        .map(|p| p.leading_coeff().unwrap().clone())
        .collect();
    let degree_gaps = degrees.windows(2).map(|w| w[0] - w[1]).collect();
    Ok(PrsLevel {
        elements,
        alphas,
        betas,
        quotients,
        degrees,
        leading_coeffs,
        degree_gaps,
    })
}

/// Complete PRS of `f` and `g`: remainder steps run until the next
/// remainder vanishes, so the last element is the GCD up to a constant.
pub fn prs(f: &Polynomial, g: &Polynomial, rule: &DivisionRule) -> Result<PrsLevel> {
    let mut cursor = RuleCursor::new(rule);
    let level = prs_with(f, g, &mut cursor)?;
    cursor.finish()?;
    Ok(level)
}

/// A complete recursive PRS: level `k+1` restarts on the last element of
/// level `k` and its derivative, until some level ends in a constant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecursivePrs {
    pub rule: DivisionRule,
    /// `levels[k-1]` is level `k`.
    pub levels: Vec<PrsLevel>,
    /// `gammas[k-1]` relates the last element of level `k` to the primitive
    /// GCD of that level's first two elements.
    pub gammas: Vec<Rational>,
    /// `j_values[0] = m` and `j_values[k]` is the degree of the last
    /// element of level `k`.
    pub j_values: Vec<usize>,
    pub complete: bool,
}

impl RecursivePrs {
    /// Number of levels `t`.
    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    /// Level `k`, 1-based.
    pub fn level(&self, k: usize) -> &PrsLevel {
        &self.levels[k - 1]
    }

    pub fn j(&self, k: usize) -> usize {
        self.j_values[k]
    }

    /// `deg F`.
    pub fn m(&self) -> usize {
        self.j_values[0]
    }

    /// `deg G`.
    pub fn n(&self) -> usize {
        self.levels[0].degrees[1]
    }

    pub fn f(&self) -> &Polynomial {
        &self.levels[0].elements[0]
    }

    pub fn g(&self) -> &Polynomial {
        &self.levels[0].elements[1]
    }
}

fn gamma_of(level: &PrsLevel) -> Rational {
    let g = poly::gcd(level.element(1), level.element(2));
    let (_, primitive) = g.content_primitive().expect("gcd of nonzero inputs");
    level
        .last()
        .ratio_to(&primitive)
        .expect("last PRS element is proportional to the gcd")
}

/// Recursive PRS of `f` and `g`. Needs `deg f > deg g`.
pub fn rprs(f: &Polynomial, g: &Polynomial, rule: &DivisionRule) -> Result<RecursivePrs> {
    let mut cursor = RuleCursor::new(rule);
    let first = prs_with(f, g, &mut cursor)?;
    let mut levels = vec![first];
    while !levels.last().unwrap().last().is_constant() {
        let top = levels.last().unwrap().last().clone();
        let d = top.derivative();
        levels.push(prs_with(&top, &d, &mut cursor)?);
    }
    cursor.finish()?;

    let gammas = levels.iter().map(gamma_of).collect();
    let mut j_values = vec![f.degree().unwrap()];
    j_values.extend(levels.iter().map(|l| l.last().degree().unwrap()));
    let complete = *j_values.last().unwrap() == 0;
    Ok(RecursivePrs {
        rule: rule.clone(),
        levels,
        gammas,
        j_values,
        complete,
    })
}

/// Recursive PRS of `(p, p')` under the `(1, -1)` rule.
pub fn recursive_sturm(p: &Polynomial) -> Result<RecursivePrs> {
    if p.degree().unwrap_or(0) < 1 {
        return Err(Error::ConstantInput);
    }
    rprs(p, &p.derivative(), &DivisionRule::Sturm)
}

/// Primitive GCD representative read off the last element of the
/// primitive PRS.
pub fn gcd_via_prs(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    let level = prs(f, g, &DivisionRule::Primitive)?;
    Ok(level.last().content_primitive()?.1)
}
