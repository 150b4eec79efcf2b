//! Reader for polynomial expressions.
//!
//! ```text
//! expr     := term (('+'|'-') term)* ;
//! term     := factor ('*' factor)* ;
//! factor   := rational | var ('^' nat)? | '(' expr ')' | '-' factor ;
//! rational := int ('/' nat)? ;
//! ```
//!
//! Whitespace is ignored and multiplication must be explicit.

use crate::error::{ParseError, ParseErrorKind};
use crate::monomial::Monomial;
use crate::polynomial::Polynomial;
use crate::ring::RingSpec;
use crate::scalar::Coefficient;

const MAX_EXPONENT: u32 = 10_000;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Num(s) => format!("number `{s}`"),
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
        }
    }
}

fn err(column: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { column, kind }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let single = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(t) = single {
            out.push((t, col));
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '.' || chars[i] == '_') {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            if !s.chars().all(|c| c.is_ascii_digit()) {
                return Err(err(col, ParseErrorKind::MalformedNumber(s)));
            }
            out.push((Tok::Num(s), col));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), col));
        } else {
            return Err(err(col, ParseErrorKind::UnexpectedChar(c)));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end_col: usize,
    ring: &'a RingSpec,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |(_, c)| *c)
    }

    fn found(&self) -> String {
        self.peek().map_or_else(|| "end of input".to_string(), Tok::describe)
    }

    fn expr<F: Coefficient>(&mut self) -> Result<Polynomial<F>, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term<F: Coefficient>(&mut self) -> Result<Polynomial<F>, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = acc.mul(&self.factor()?);
                }
                Some(Tok::Slash) => return Err(err(self.col(), ParseErrorKind::Division)),
                Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen) => {
                    return Err(err(
                        self.col(),
                        ParseErrorKind::Unexpected {
                            found: self.found(),
                            expected: "an operator (multiplication must be written with `*`)",
                        },
                    ))
                }
                _ => return Ok(acc),
            }
        }
    }

    fn nat(&mut self) -> Result<String, ParseError> {
        match self.peek() {
            Some(Tok::Num(s)) => {
                let s = s.clone();
                self.pos += 1;
                Ok(s)
            }
            _ => Err(err(self.col(), ParseErrorKind::Unexpected { found: self.found(), expected: "a natural number" })),
        }
    }

    fn factor<F: Coefficient>(&mut self) -> Result<Polynomial<F>, ParseError> {
        let n = self.ring.nvars();
        let col = self.col();
        match self.peek().cloned() {
            Some(Tok::Num(num)) => {
                self.pos += 1;
                let mut value = F::from_integer_literal(&num)
                    .ok_or_else(|| err(col, ParseErrorKind::MalformedNumber(num.clone())))?;
                if self.peek() == Some(&Tok::Slash) {
                    self.pos += 1;
                    let dcol = self.col();
                    let den = self.nat()?;
                    let den = F::from_integer_literal(&den)
                        .ok_or_else(|| err(dcol, ParseErrorKind::MalformedNumber(den.clone())))?;
                    if den.is_zero() {
                        return Err(err(dcol, ParseErrorKind::ZeroDenominator));
                    }
                    value = value / den;
                }
                Ok(Polynomial::constant(n, value))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                let idx =
                    self.ring.index_of(&name).ok_or_else(|| err(col, ParseErrorKind::UnknownVariable(name.clone())))?;
                let mut m = Monomial::variable(n, idx);
                if self.peek() == Some(&Tok::Caret) {
                    self.pos += 1;
                    let ecol = self.col();
                    match self.peek() {
                        Some(Tok::Minus) => {
                            return Err(err(ecol, ParseErrorKind::MalformedExponent("negative exponent".into())))
                        }
                        Some(Tok::Num(_)) => {}
                        _ => {
                            return Err(err(
                                ecol,
                                ParseErrorKind::MalformedExponent(format!(
                                    "expected a natural number, found {}",
                                    self.found()
                                )),
                            ))
                        }
                    }
                    let e = self.nat()?;
                    let e: u32 = e.parse().ok().filter(|&e| e <= MAX_EXPONENT).ok_or_else(|| {
                        err(ecol, ParseErrorKind::MalformedExponent(format!("`{e}` is out of range")))
                    })?;
                    m.set_exponent(idx, e);
                }
                Ok(Polynomial::term(m, F::one()))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(err(self.col(), ParseErrorKind::Unexpected { found: self.found(), expected: "`)`" }));
                }
                self.pos += 1;
                if self.peek() == Some(&Tok::Caret) {
                    return Err(err(
                        self.col(),
                        ParseErrorKind::MalformedExponent("exponents apply to variables only".into()),
                    ));
                }
                Ok(inner)
            }
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(self.factor::<F>()?.neg())
            }
            Some(Tok::Slash) => Err(err(col, ParseErrorKind::Division)),
            _ => {
                Err(err(col, ParseErrorKind::Unexpected { found: self.found(), expected: "a number, variable or `(`" }))
            }
        }
    }
}

/// Parses `text` as a polynomial in `ring`.
pub fn parse_polynomial<F: Coefficient>(text: &str, ring: &RingSpec) -> Result<Polynomial<F>, ParseError> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return Err(err(1, ParseErrorKind::Empty));
    }
    let mut p = Parser { toks, pos: 0, end_col: text.chars().count() + 1, ring };
    let poly = p.expr()?;
    if p.pos != p.toks.len() {
        let kind = if p.peek() == Some(&Tok::Slash) {
            ParseErrorKind::Division
        } else {
            ParseErrorKind::Unexpected { found: p.found(), expected: "end of input" }
        };
        return Err(err(p.col(), kind));
    }
    Ok(poly)
}
