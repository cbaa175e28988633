//! Exact polynomial remainder sequences, recursive PRS, classical and
//! recursive subresultants, and real-root counting with multiplicity.

pub mod corpus;
pub mod error;
pub mod linalg;
pub mod parse;
pub mod par;
pub mod poly;
pub mod prs;
pub mod rational;
pub mod recsubres;
pub mod report;
pub mod rootcount;
pub mod subres;

pub use error::{Error, Result};
pub use par::Execution;
pub use poly::Polynomial;
pub use prs::{prs, recursive_sturm, rprs, DivisionRule, PrsLevel, RecursivePrs};
pub use parse::{parse_polynomial, ParseError};
pub use rational::Rational;
pub use recsubres::{RecSubresBuilder, RecSubresMatrix, SimilarityFactors};
pub use report::VerificationReport;
pub use rootcount::{count_real_roots_with_multiplicity, RootCount};
