//! Serializable output documents. Field order here is the key order on the
//! wire. Rationals are `"num/den"` strings and polynomials are
//! low-degree-first arrays of them.

use recprs_core::linalg::ExactMatrix;
use recprs_core::prs::{PrsLevel, RecursivePrs};
use recprs_core::rational::to_fraction_string;
use recprs_core::recsubres::SimilarityFactors;
use recprs_core::report::VerificationReport;
use recprs_core::rootcount::LambdaPair;
use recprs_core::{Polynomial, Rational};
use serde::Serialize;

pub fn rational(r: &Rational) -> String {
    to_fraction_string(r)
}

pub fn rationals(rs: &[Rational]) -> Vec<String> {
    rs.iter().map(rational).collect()
}

pub fn poly(p: &Polynomial) -> Vec<String> {
    rationals(p.coeffs())
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Input {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<Vec<String>>,
    pub f: Vec<String>,
    pub g: Vec<String>,
}

#[derive(Serialize)]
pub struct Level {
    pub elements: Vec<Vec<String>>,
    pub degrees: Vec<usize>,
    pub leading_coeffs: Vec<String>,
    pub alphas: Vec<String>,
    pub betas: Vec<String>,
    pub quotients: Vec<Vec<String>>,
}

impl From<&PrsLevel> for Level {
    fn from(l: &PrsLevel) -> Self {
        Level {
            elements: l.elements.iter().map(poly).collect(),
            degrees: l.degrees.clone(),
            leading_coeffs: rationals(&l.leading_coeffs),
            alphas: rationals(&l.alphas),
            betas: rationals(&l.betas),
            quotients: l.quotients.iter().map(poly).collect(),
        }
    }
}

#[derive(Serialize)]
pub struct PrsDoc {
    pub command: &'static str,
    pub input: Input,
    pub rule: String,
    pub level: Level,
}

#[derive(Serialize)]
pub struct RprsDoc {
    pub command: &'static str,
    pub input: Input,
    pub rule: String,
    pub j_values: Vec<usize>,
    pub complete: bool,
    pub gammas: Vec<String>,
    pub levels: Vec<Level>,
}

impl RprsDoc {
    pub fn new(input: Input, rp: &RecursivePrs) -> Self {
        RprsDoc {
            command: "rprs",
            input,
            rule: rp.rule.to_string(),
            j_values: rp.j_values.clone(),
            complete: rp.complete,
            gammas: rationals(&rp.gammas),
            levels: rp.levels.iter().map(Level::from).collect(),
        }
    }
}

#[derive(Serialize)]
pub struct Lambda {
    pub at_minus_inf: Vec<String>,
    pub at_plus_inf: Vec<String>,
}

impl From<&LambdaPair> for Lambda {
    fn from(l: &LambdaPair) -> Self {
        Lambda {
            at_minus_inf: rationals(&l.at_minus_inf),
            at_plus_inf: rationals(&l.at_plus_inf),
        }
    }
}

#[derive(Serialize)]
pub struct CountDoc {
    pub command: &'static str,
    pub input: Input,
    pub total: i64,
    pub per_level: Vec<i64>,
    pub lambdas: Vec<Lambda>,
}

#[derive(Serialize)]
pub struct SubresEntry {
    pub j: usize,
    pub subresultant: Vec<String>,
}

#[derive(Serialize)]
pub struct SubresDoc {
    pub command: &'static str,
    pub input: Input,
    pub entries: Vec<SubresEntry>,
}

#[derive(Serialize)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<String>>,
}

impl From<&ExactMatrix> for Matrix {
    fn from(m: &ExactMatrix) -> Self {
        Matrix {
            rows: m.rows(),
            cols: m.cols(),
            entries: m.row_vecs().iter().map(|r| rationals(r)).collect(),
        }
    }
}

#[derive(Serialize)]
pub struct Factors {
    pub columns: usize,
    pub level_factor: String,
    pub blocks: i64,
    pub sign: String,
    pub similarity: String,
}

impl From<&SimilarityFactors> for Factors {
    fn from(f: &SimilarityFactors) -> Self {
        Factors {
            columns: f.columns,
            level_factor: rational(&f.level_factor),
            blocks: f.blocks,
            sign: rational(&f.sign),
            similarity: rational(&f.similarity),
        }
    }
}

#[derive(Serialize)]
pub struct RecSubresDoc {
    pub command: &'static str,
    pub input: Input,
    pub rule: String,
    pub k: usize,
    pub j: usize,
    pub rows: usize,
    pub cols: usize,
    pub recursive_subresultant: Vec<String>,
    pub factors: Factors,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Matrix>,
}

#[derive(Serialize)]
pub struct Check {
    pub claim: String,
    pub k: usize,
    pub j: usize,
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
    pub factor: Option<String>,
    pub pass: bool,
}

#[derive(Serialize)]
pub struct Report {
    pub claim: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<Input>,
    pub pass: bool,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(r: &VerificationReport, input: Option<Input>) -> Self {
        Report {
            claim: r.claim.clone(),
            input,
            pass: r.passed(),
            checks: r
                .checks
                .iter()
                .map(|c| Check {
                    claim: c.clause.to_string(),
                    k: c.k,
                    j: c.j,
                    lhs: poly(&c.lhs),
                    rhs: poly(&c.rhs),
                    factor: c.factor.as_ref().map(rational),
                    pass: c.pass,
                })
                .collect(),
        }
    }
}

#[derive(Serialize)]
pub struct VerifyDoc {
    pub command: &'static str,
    pub theorem: &'static str,
    pub rule: String,
    pub input: Option<Input>,
    pub seed: Option<u64>,
    pub pass: bool,
    pub reports: Vec<Report>,
}

#[derive(Serialize)]
pub struct DimsDoc {
    pub command: &'static str,
    pub m: usize,
    pub n: usize,
    pub j_values: Vec<usize>,
    pub k: usize,
    pub j: usize,
    pub rows: usize,
    pub cols: usize,
}
