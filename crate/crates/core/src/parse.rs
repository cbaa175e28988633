//! Polynomial expressions in `x`.
//!
//! ```text
//! expr     = term (("+" | "-") term)*
//! term     = unary ("*" unary)*
//! unary    = ("+" | "-") unary | power
//! power    = atom ("^" exponent)?
//! exponent = ("+" | "-")? number | "(" exponent ")"
//! atom     = number | "x" | "(" expr ")"
//! number   = digits ("/" digits)?
//! ```
//!
//! Multiplication is always explicit. U+2212 is accepted as a minus sign.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::poly::Polynomial;
use crate::rational::Rational;

/// Largest exponent accepted after `^`, and largest degree a power may
/// produce.
pub const MAX_EXPONENT: u32 = 4096;

/// Deepest nesting of parentheses and unary signs.
pub const MAX_DEPTH: usize = 256;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Position {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("{at}: expected {}, found {found}", expected.join(" or "))]
    Syntax {
        at: Position,
        expected: Vec<&'static str>,
        found: String,
    },
    #[error("{at}: exponent {value} is not an integer")]
    NonIntegerExponent { at: Position, value: String },
    #[error("{at}: exponent {value} is negative")]
    NegativeExponent { at: Position, value: String },
    #[error("{at}: exponent {value} would push the degree past {MAX_EXPONENT}")]
    ExponentTooLarge { at: Position, value: String },
    #[error("{at}: nesting deeper than {MAX_DEPTH}")]
    TooDeep { at: Position },
    #[error("{at}: zero denominator")]
    ZeroDenominator { at: Position },
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(Rational),
    X,
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Num(r) => format!("number `{r}`"),
            Tok::X => "`x`".into(),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, Position)>, ParseError> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut col) = (1, 1);
    while let Some(&c) = chars.peek() {
        let at = Position { line, col };
        if c == '\n' {
            chars.next();
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            chars.next();
            col += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let mut num = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                num.push(d);
                chars.next();
                col += 1;
            }
            let mut value = Rational::from_integer(num.parse::<BigInt>().unwrap());
            if chars.peek() == Some(&'/') {
                chars.next();
                col += 1;
                let mut den = String::new();
                while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                    den.push(d);
                    chars.next();
                    col += 1;
                }
                if den.is_empty() {
                    let found = chars.peek().map_or("end of input".to_string(), |c| format!("`{c}`"));
                    return Err(ParseError::Syntax {
                        at: Position { line, col },
                        expected: vec!["denominator digits"],
                        found,
                    });
                }
                let den: BigInt = den.parse().unwrap();
                if den.is_zero() {
                    return Err(ParseError::ZeroDenominator { at });
                }
                value /= Rational::from_integer(den);
            }
            out.push((Tok::Num(value), at));
            continue;
        }
        let tok = match c {
            'x' => Tok::X,
            '+' => Tok::Plus,
            '-' | '\u{2212}' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            other => {
                return Err(ParseError::Syntax {
                    at,
                    expected: vec!["number", "`x`", "operator", "parenthesis"],
                    found: format!("`{}`", other.escape_debug()),
                })
            }
        };
        chars.next();
        col += 1;
        out.push((tok, at));
    }
    out.push((Tok::End, Position { line, col }));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, Position)>,
    pos: usize,
    depth: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn at(&self) -> Position {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self, expected: Vec<&'static str>) -> ParseError {
        ParseError::Syntax {
            at: self.at(),
            expected,
            found: self.peek().describe(),
        }
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = acc + self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.unary()?;
        while *self.peek() == Tok::Star {
            self.bump();
            acc = acc * self.unary()?;
        }
        Ok(acc)
    }

    fn descend(&mut self) -> Result<(), ParseError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(ParseError::TooDeep { at: self.at() });
        }
        Ok(())
    }

    fn unary(&mut self) -> Result<Polynomial, ParseError> {
        self.descend()?;
        let out = self.unary_inner();
        self.depth -= 1;
        out
    }

    fn unary_inner(&mut self) -> Result<Polynomial, ParseError> {
        match self.peek() {
            Tok::Plus => {
                self.bump();
                self.unary()
            }
            Tok::Minus => {
                self.bump();
                Ok(-self.unary()?)
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let at = self.at();
        let e = self.exponent()?;
        let shown = e.to_string();
        if !e.is_integer() {
            return Err(ParseError::NonIntegerExponent { at, value: shown });
        }
        if e.is_negative() {
            return Err(ParseError::NegativeExponent { at, value: shown });
        }
        let base_deg = base.degree().unwrap_or(0) as u64;
        match e
            .to_integer()
            .to_u32()
            .filter(|&n| n <= MAX_EXPONENT && base_deg * n as u64 <= MAX_EXPONENT as u64)
        {
            Some(n) => Ok(base.pow(n)),
            None => Err(ParseError::ExponentTooLarge { at, value: shown }),
        }
    }

    fn exponent(&mut self) -> Result<Rational, ParseError> {
        self.descend()?;
        let out = self.exponent_inner();
        self.depth -= 1;
        out
    }

    fn exponent_inner(&mut self) -> Result<Rational, ParseError> {
        match self.bump() {
            Tok::Num(r) => Ok(r),
            Tok::Minus => Ok(-self.exponent()?),
            Tok::Plus => self.exponent(),
            Tok::LParen => {
                let e = self.exponent()?;
                self.close()?;
                Ok(e)
            }
            _ => {
                self.pos -= 1;
                Err(self.unexpected(vec!["exponent", "`(`"]))
            }
        }
    }

    fn close(&mut self) -> Result<(), ParseError> {
        if *self.peek() == Tok::RParen {
            self.bump();
            Ok(())
        } else {
            Err(self.unexpected(vec!["`)`", "operator"]))
        }
    }

    fn atom(&mut self) -> Result<Polynomial, ParseError> {
        match self.peek().clone() {
            Tok::Num(r) => {
                self.bump();
                Ok(Polynomial::constant(r))
            }
            Tok::X => {
                self.bump();
                Ok(Polynomial::x())
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                self.close()?;
                Ok(inner)
            }
            _ => Err(self.unexpected(vec!["number", "`x`", "`(`"])),
        }
    }
}

/// Parses a polynomial expression.
pub fn parse_polynomial(text: &str) -> Result<Polynomial, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0, depth: 0 };
    if *p.peek() == Tok::End {
        return Err(p.unexpected(vec!["expression"]));
    }
    let poly = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.unexpected(vec!["operator", "end of input"]));
    }
    Ok(poly)
}

impl std::str::FromStr for Polynomial {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_polynomial(s)
    }
}
