//! `recprs`: recursive PRS, subresultants and root counts from the shell.
//!
//! Exit status is 0 on success, 1 when a verification finds a failing
//! clause, and 2 on usage, parse or range errors.

mod input;
mod json;

use std::fmt::Write as _;
use std::io::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use recprs_core::corpus::{self, multiplicity_poly, random_pair};
use recprs_core::linalg::ExactMatrix;
use recprs_core::prs::{prs, rprs, DivisionRule, PrsLevel, RecursivePrs};
use recprs_core::recsubres::{rec_subres_dims, RecSubresBuilder};
use recprs_core::report::VerificationReport;
use recprs_core::rootcount::{count_from_rprs, lambda_pair};
use recprs_core::subres::{subresultant_chain, subresultant_with, verify_fundamental_theorem_with};
use recprs_core::{Execution, Polynomial};
use serde::Serialize;

use input::{resolve, Slot};

/// Matrices wider than this are summarized in text mode.
const TEXT_MATRIX_MAX_COLS: usize = 40;

#[derive(Parser)]
#[command(name = "recprs", version, about = "Recursive polynomial remainder sequences and subresultants")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Division rule for PRS computations.
    #[arg(long, value_enum, default_value_t = Rule::Sturm, global = true)]
    rule: Rule,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Rule {
    Sturm,
    Monic,
    Primitive,
    Subresultant,
}

impl From<Rule> for DivisionRule {
    fn from(r: Rule) -> Self {
        match r {
            Rule::Sturm => DivisionRule::Sturm,
            Rule::Monic => DivisionRule::MonicEuclid,
            Rule::Primitive => DivisionRule::Primitive,
            Rule::Subresultant => DivisionRule::SubresultantPrs,
        }
    }
}

/// A pair `(F, G)`, or a single `P` standing for `(P, P')`. Each value is
/// an expression or `@file`.
#[derive(Args, Clone, Default)]
struct Operands {
    #[arg(short = 'p', conflicts_with_all = ["f", "g"])]
    p: Option<String>,
    #[arg(short = 'f', requires = "g")]
    f: Option<String>,
    #[arg(short = 'g', requires = "f")]
    g: Option<String>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Complete PRS of (F, G).
    Prs(Operands),
    /// Recursive PRS of (F, G) or (P, P').
    Rprs(Operands),
    /// Real roots of P counted with multiplicity (always the sturm rule).
    SturmCount {
        #[arg(short = 'p')]
        p: String,
    },
    /// Classical subresultant S_j, or the whole chain.
    Subres {
        #[command(flatten)]
        ops: Operands,
        #[arg(short = 'j', required_unless_present = "chain")]
        j: Option<usize>,
        #[arg(long, conflicts_with = "j")]
        chain: bool,
    },
    /// Recursive subresultant at (k, j) with its similarity factors.
    Recsubres {
        #[command(flatten)]
        ops: Operands,
        #[arg(short = 'k')]
        k: usize,
        #[arg(short = 'j')]
        j: usize,
        /// Also emit the matrix M^(k,j).
        #[arg(long)]
        matrix: bool,
    },
    /// Check an identity on given inputs or a seeded random corpus.
    Verify {
        #[command(subcommand)]
        which: Verify,
    },
    /// Rows and columns of M^(k,j) from the closed form.
    Dims {
        #[command(flatten)]
        ops: Operands,
        #[arg(short = 'k')]
        k: usize,
        #[arg(short = 'j')]
        j: usize,
        #[arg(long, requires_all = ["n", "j_values"], conflicts_with_all = ["p", "f", "g"])]
        m: Option<usize>,
        #[arg(long, requires = "m")]
        n: Option<usize>,
        /// j_0, j_1, ... separated by commas.
        #[arg(long, value_delimiter = ',', requires = "m")]
        j_values: Option<Vec<usize>>,
    },
}

#[derive(Subcommand)]
enum Verify {
    /// Classical fundamental theorem for every j.
    Fundamental(VerifyArgs),
    /// Recursive subresultant = R_{k,j} * classical subresultant.
    Lemma1(VerifyArgs),
    /// Recursive fundamental theorem, level by level.
    Theorem2(VerifyArgs),
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    ops: Operands,
    /// Every valid (k, j) or level.
    #[arg(long)]
    all: bool,
    #[arg(short = 'k')]
    k: Option<usize>,
    #[arg(short = 'j')]
    j: Option<usize>,
    /// Verify a random corpus from this seed instead of given inputs.
    #[arg(long, conflicts_with_all = ["p", "f", "g"])]
    seed: Option<u64>,
    /// Corpus size for --seed.
    #[arg(long, default_value_t = 10, requires = "seed")]
    count: usize,
}

/// A reason to stop, with its exit status.
#[derive(Debug)]
pub struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<recprs_core::Error> for Failure {
    fn from(e: recprs_core::Error) -> Self {
        Failure::usage(e.to_string())
    }
}

type Outcome = Result<bool, Failure>;

struct Ctx {
    format: Format,
    rule: DivisionRule,
    exec: Execution,
}

impl Ctx {
    /// Prints `doc` as JSON or `text()` and passes `ok` through.
    fn emit<T: Serialize>(&self, doc: &T, text: impl FnOnce() -> String, ok: bool) -> Outcome {
        let body = match self.format {
            Format::Json => serde_json::to_string_pretty(doc).expect("serializable") + "\n",
            Format::Text => text(),
        };
        // a closed pipe downstream is not our failure
        let _ = std::io::stdout().lock().write_all(body.as_bytes());
        Ok(ok)
    }
}

/// Resolves operands to `(F, G)` and their echo for JSON output.
fn pair(ops: &Operands) -> Result<(Polynomial, Polynomial, json::Input), Failure> {
    match (&ops.p, &ops.f, &ops.g) {
        (Some(p), _, _) => {
            let p = resolve(p, Slot::P)?;
            let d = p.derivative();
            let input = json::Input {
                p: Some(json::poly(&p)),
                f: json::poly(&p),
                g: json::poly(&d),
            };
            Ok((p, d, input))
        }
        (None, Some(f), Some(g)) => {
            let f = resolve(f, Slot::F)?;
            let g = resolve(g, Slot::G)?;
            let input = json::Input {
                p: None,
                f: json::poly(&f),
                g: json::poly(&g),
            };
            Ok((f, g, input))
        }
        _ => Err(Failure::usage("give -p P, or both -f F and -g G")),
    }
}

fn level_text(out: &mut String, level: &PrsLevel, k: Option<usize>) {
    let tag = |i: usize| match k {
        Some(k) => format!("P_{i}^({k})"),
        None => format!("P_{i}"),
    };
    for (i, p) in level.elements.iter().enumerate() {
        let _ = writeln!(out, "  {} = {p}", tag(i + 1));
    }
    for (s, (a, b)) in level.alphas.iter().zip(&level.betas).enumerate() {
        let _ = writeln!(out, "  alpha_{0} = {a}, beta_{0} = {b}", s + 3);
    }
}

fn matrix_text(out: &mut String, m: &ExactMatrix) {
    if m.cols() > TEXT_MATRIX_MAX_COLS {
        let _ = writeln!(
            out,
            "matrix: {}x{} (wider than {TEXT_MATRIX_MAX_COLS} columns; use --format json for entries)",
            m.rows(),
            m.cols()
        );
        return;
    }
    let cells: Vec<Vec<String>> = m
        .row_vecs()
        .iter()
        .map(|r| r.iter().map(|v| v.to_string()).collect())
        .collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    let _ = writeln!(out, "matrix: {}x{}", m.rows(), m.cols());
    for row in cells {
        let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        let _ = writeln!(out, "  [{}]", line.join(" "));
    }
}

fn cmd_prs(ctx: &Ctx, ops: &Operands) -> Outcome {
    let (f, g, input) = pair(ops)?;
    let level = prs(&f, &g, &ctx.rule)?;
    let doc = json::PrsDoc {
        command: "prs",
        input,
        rule: ctx.rule.to_string(),
        level: json::Level::from(&level),
    };
    ctx.emit(
        &doc,
        || {
            let mut out = format!("prs ({} rule), {} elements\n", ctx.rule, level.len());
            level_text(&mut out, &level, None);
            out
        },
        true,
    )
}

fn rprs_text(rp: &RecursivePrs) -> String {
    let mut out = format!(
        "recursive prs ({} rule), {} levels, j = {:?}\n",
        rp.rule,
        rp.depth(),
        rp.j_values
    );
    for k in 1..=rp.depth() {
        let _ = writeln!(out, "level {k}, gamma = {}", rp.gammas[k - 1]);
        level_text(&mut out, rp.level(k), Some(k));
    }
    out
}

fn cmd_rprs(ctx: &Ctx, ops: &Operands) -> Outcome {
    let (f, g, input) = pair(ops)?;
    let rp = rprs(&f, &g, &ctx.rule)?;
    ctx.emit(&json::RprsDoc::new(input, &rp), || rprs_text(&rp), true)
}

fn cmd_sturm_count(ctx: &Ctx, p: &str) -> Outcome {
    let ops = Operands {
        p: Some(p.to_string()),
        ..Operands::default()
    };
    let (f, g, input) = pair(&ops)?;
    if f.degree().unwrap_or(0) < 1 {
        return Err(recprs_core::Error::ConstantInput.into());
    }
    let rp = rprs(&f, &g, &DivisionRule::Sturm)?;
    let count = count_from_rprs(&rp)?;
    let lambdas: Vec<_> = rp.levels.iter().map(lambda_pair).collect();
    let doc = json::CountDoc {
        command: "sturm-count",
        input,
        total: count.total,
        per_level: count.per_level.clone(),
        lambdas: lambdas.iter().map(json::Lambda::from).collect(),
    };
    ctx.emit(
        &doc,
        || {
            let parts: Vec<String> = count.per_level.iter().map(i64::to_string).collect();
            format!("real roots with multiplicity: {} = {}\n", count.total, parts.join(" + "))
        },
        true,
    )
}

fn cmd_subres(ctx: &Ctx, ops: &Operands, j: Option<usize>) -> Outcome {
    let (f, g, input) = pair(ops)?;
    let entries: Vec<(usize, Polynomial)> = match j {
        Some(j) => vec![(j, subresultant_with(&f, &g, j, ctx.exec)?)],
        None => subresultant_chain(&f, &g, ctx.exec)?
            .entries
            .into_iter()
            .enumerate()
            .collect(),
    };
    let doc = json::SubresDoc {
        command: "subres",
        input,
        entries: entries
            .iter()
            .map(|(j, s)| json::SubresEntry {
                j: *j,
                subresultant: json::poly(s),
            })
            .collect(),
    };
    ctx.emit(
        &doc,
        || {
            entries
                .iter()
                .map(|(j, s)| format!("S_{j} = {s}\n"))
                .collect()
        },
        true,
    )
}

fn cmd_recsubres(ctx: &Ctx, ops: &Operands, k: usize, j: usize, want_matrix: bool) -> Outcome {
    let (f, g, input) = pair(ops)?;
    let rp = rprs(&f, &g, &ctx.rule)?;
    let builder = RecSubresBuilder::new(&rp);
    let m = builder.matrix(k, j)?;
    let s = builder.rec_subresultant(k, j, ctx.exec)?;
    let factors = builder.similarity_factors(k, j)?;
    let doc = json::RecSubresDoc {
        command: "recsubres",
        input,
        rule: ctx.rule.to_string(),
        k,
        j,
        rows: m.matrix.rows(),
        cols: m.matrix.cols(),
        recursive_subresultant: json::poly(&s),
        factors: json::Factors::from(&factors),
        matrix: want_matrix.then(|| json::Matrix::from(&m.matrix)),
    };
    ctx.emit(
        &doc,
        || {
            let mut out = format!(
                "M^({k},{j}): {}x{}\nrecursive S_({k},{j}) = {s}\nu = {}, B_{k} = {}, b = {}, r = {}, R = {}\n",
                m.matrix.rows(),
                m.matrix.cols(),
                factors.columns,
                factors.level_factor,
                factors.blocks,
                factors.sign,
                factors.similarity
            );
            if want_matrix {
                matrix_text(&mut out, &m.matrix);
            }
            out
        },
        true,
    )
}

/// Runs `check` on every case and prints the combined result.
fn run_verify(
    ctx: &Ctx,
    theorem: &'static str,
    args: &VerifyArgs,
    check: impl Fn(&Polynomial, &Polynomial) -> Result<VerificationReport, Failure>,
) -> Outcome {
    let mut cases: Vec<(Polynomial, Polynomial, json::Input)> = Vec::new();
    let top_input = match args.seed {
        Some(seed) => {
            let mut rng = corpus::rng(seed);
            for i in 0..args.count {
                let (f, g) = if theorem == "fundamental" {
                    let m = 4 + i % 5;
                    random_pair(&mut rng, m, (i % 4).min(m - 2))
                } else {
                    let p = multiplicity_poly(&mut rng, 10).0;
                    let d = p.derivative();
                    (p, d)
                };
                let input = json::Input {
                    p: None,
                    f: json::poly(&f),
                    g: json::poly(&g),
                };
                cases.push((f, g, input));
            }
            None
        }
        None => {
            let case = pair(&args.ops)?;
            let input = case.2.clone();
            cases.push(case);
            Some(input)
        }
    };
    let mut reports = Vec::new();
    for (f, g, input) in &cases {
        let report = check(f, g)?;
        let echo = args.seed.map(|_| input.clone());
        reports.push((report, echo));
    }
    let pass = reports.iter().all(|(r, _)| r.passed());
    let doc = json::VerifyDoc {
        command: "verify",
        theorem,
        rule: ctx.rule.to_string(),
        input: top_input,
        seed: args.seed,
        pass,
        reports: reports.iter().map(|(r, i)| json::Report::new(r, i.clone())).collect(),
    };
    ctx.emit(
        &doc,
        || {
            let mut out = String::new();
            for (n, (r, _)) in reports.iter().enumerate() {
                if args.seed.is_some() {
                    let _ = writeln!(out, "case {n}:");
                }
                out.push_str(&r.to_string());
            }
            let _ = writeln!(out, "{theorem}: {}", if pass { "PASS" } else { "FAIL" });
            out
        },
        pass,
    )
}

fn cmd_verify(ctx: &Ctx, which: &Verify) -> Outcome {
    match which {
        Verify::Fundamental(args) => run_verify(ctx, "fundamental", args, |f, g| {
            let mut report = verify_fundamental_theorem_with(f, g, &ctx.rule, ctx.exec)?;
            if let Some(j) = args.j.filter(|_| !args.all) {
                report.checks.retain(|c| c.j == j);
            }
            Ok(report)
        }),
        Verify::Lemma1(args) => {
            let pick = match (args.all || args.seed.is_some(), args.k, args.j) {
                (true, _, _) => None,
                (false, Some(k), Some(j)) => Some((k, j)),
                _ => return Err(Failure::usage("lemma1 needs --all, or both -k and -j")),
            };
            run_verify(ctx, "lemma1", args, |f, g| {
                let rp = rprs(f, g, &ctx.rule)?;
                let builder = RecSubresBuilder::new(&rp);
                Ok(match pick {
                    None => builder.verify_lemma1_all(ctx.exec)?,
                    Some((k, j)) => builder.verify_lemma1(k, j, ctx.exec)?,
                })
            })
        }
        Verify::Theorem2(args) => {
            let pick = match (args.all || args.seed.is_some(), args.k) {
                (true, _) => None,
                (false, Some(k)) => Some(k),
                _ => return Err(Failure::usage("theorem2 needs --all or -k")),
            };
            run_verify(ctx, "theorem2", args, |f, g| {
                let rp = rprs(f, g, &ctx.rule)?;
                let builder = RecSubresBuilder::new(&rp);
                Ok(match pick {
                    None => builder.verify_theorem2_all(ctx.exec)?,
                    Some(k) => builder.verify_theorem2(k, ctx.exec)?,
                })
            })
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_dims(
    ctx: &Ctx,
    ops: &Operands,
    k: usize,
    j: usize,
    m: Option<usize>,
    n: Option<usize>,
    j_values: Option<&Vec<usize>>,
) -> Outcome {
    let (m, n, j_values) = match (m, n, j_values) {
        (Some(m), Some(n), Some(js)) => (m, n, js.clone()),
        _ => {
            let (f, g, _) = pair(ops)?;
            let rp = rprs(&f, &g, &ctx.rule)?;
            (rp.m(), rp.n(), rp.j_values.clone())
        }
    };
    let (rows, cols) = rec_subres_dims(m, n, &j_values, k, j)?;
    let doc = json::DimsDoc {
        command: "dims",
        m,
        n,
        j_values,
        k,
        j,
        rows,
        cols,
    };
    ctx.emit(&doc, || format!("M^({k},{j}): {rows}x{cols}\n"), true)
}

fn run(cli: &Cli) -> Outcome {
    let ctx = Ctx {
        format: cli.format,
        rule: cli.rule.into(),
        exec: Execution::default(),
    };
    match &cli.cmd {
        Cmd::Prs(ops) => cmd_prs(&ctx, ops),
        Cmd::Rprs(ops) => cmd_rprs(&ctx, ops),
        Cmd::SturmCount { p } => cmd_sturm_count(&ctx, p),
        Cmd::Subres { ops, j, .. } => cmd_subres(&ctx, ops, *j),
        Cmd::Recsubres { ops, k, j, matrix } => cmd_recsubres(&ctx, ops, *k, *j, *matrix),
        Cmd::Verify { which } => cmd_verify(&ctx, which),
        Cmd::Dims {
            ops,
            k,
            j,
            m,
            n,
            j_values,
        } => cmd_dims(&ctx, ops, *k, *j, *m, *n, j_values.as_ref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            eprintln!("recprs: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
