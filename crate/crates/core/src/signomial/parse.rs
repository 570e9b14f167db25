//! Text grammar for signomials.
//!
//! ```text
//! rep    := fact [ '/' fact ]
//! fact   := sig | '(' sig ')' { '*' '(' sig ')' }
//! sig    := term { '+' term }
//! term   := atom { '*' atom }
//! atom   := number | var [ '^' ( number | '(' number ')' ) ]
//! number := ['-'] digits [ '.' digits ] [ '/' digits ]
//! var    := 'x' | 'y' | 'z' | 'x' digits
//! ```
//!
//! `+` is the tropical sum and `*` the tropical product, so numbers in a
//! term add up to its coefficient. A slash written tightly between two
//! digits belongs to a rational literal (`1/2`); any other slash separates
//! numerator from denominator. Variables are either all of `x, y, z` or all
//! indexed `x1 .. xd`; the dimension is the largest variable used unless the
//! caller fixes it.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::{Factorization, Monomial, RationalRep, Signomial};
use crate::error::{Error, Result};
use crate::rational::{self, Rational};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(Rational),
    Var(usize, bool),
    Plus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    Sep,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(text: &str, newline_separates: bool) -> Result<Vec<Token>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut line_start) = (0usize, 1usize, 0usize);
    let err = |line: usize, column: usize, message: String| Error::Parse { line, column, message };
    while i < chars.len() {
        let c = chars[i];
        let column = i - line_start + 1;
        let push = |out: &mut Vec<Token>, tok: Tok| out.push(Token { tok, line, column });
        match c {
            '\n' => {
                if newline_separates {
                    push(&mut out, Tok::Sep);
                }
                i += 1;
                line += 1;
                line_start = i;
            }
            c if c.is_whitespace() => i += 1,
            '+' => {
                push(&mut out, Tok::Plus);
                i += 1;
            }
            '*' | '⊙' => {
                push(&mut out, Tok::Star);
                i += 1;
            }
            '^' => {
                push(&mut out, Tok::Caret);
                i += 1;
            }
            '/' => {
                push(&mut out, Tok::Slash);
                i += 1;
            }
            '(' => {
                push(&mut out, Tok::LParen);
                i += 1;
            }
            ')' => {
                push(&mut out, Tok::RParen);
                i += 1;
            }
            ';' => {
                push(&mut out, Tok::Sep);
                i += 1;
            }
            '-' | '.' | '0'..='9' => {
                let start = i;
                if c == '-' {
                    i += 1;
                }
                let digits_from = i;
                while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.') {
                    i += 1;
                }
                if i == digits_from {
                    return Err(err(line, column, "expected a number after '-'".into()));
                }
                if i + 1 < chars.len() && chars[i] == '/' && chars[i - 1].is_ascii_digit() && chars[i + 1].is_ascii_digit() {
                    i += 1;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                }
                let literal: String = chars[start..i].iter().collect();
                let value = rational::parse(&literal).map_err(|e| err(line, column, e.to_string()))?;
                push(&mut out, Tok::Num(value));
            }
            'x' | 'y' | 'z' => {
                i += 1;
                let digits_from = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let tok = if i > digits_from {
                    if c != 'x' {
                        return Err(err(line, column, format!("indexed variables are written x1, x2, ..., not {c}")));
                    }
                    let index: usize = chars[digits_from..i].iter().collect::<String>().parse().unwrap_or(0);
                    if index == 0 {
                        return Err(err(line, column, "variable indices start at 1".into()));
                    }
                    Tok::Var(index - 1, true)
                } else {
                    Tok::Var(if c == 'x' { 0 } else if c == 'y' { 1 } else { 2 }, false)
                };
                push(&mut out, tok);
            }
            other => return Err(err(line, column, format!("unexpected character {other:?}"))),
        }
    }
    Ok(out)
}

type RawMonomial = (Rational, BTreeMap<usize, Rational>);

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    style: Option<bool>,
    max_var: Option<usize>,
    end: (usize, usize),
}

impl Parser {
    fn new(text: &str, newline_separates: bool) -> Result<Self> {
        let toks = lex(text, newline_separates)?;
        let lines: Vec<&str> = text.split('\n').collect();
        let end = (lines.len(), lines.last().map_or(0, |l| l.chars().count()) + 1);
        Ok(Parser {
            toks,
            pos: 0,
            style: None,
            max_var: None,
            end,
        })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    fn error(&self, message: impl Into<String>) -> Error {
        let (line, column) = self
            .toks
            .get(self.pos)
            .map_or(self.end, |t| (t.line, t.column));
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<()> {
        if self.peek() == Some(&tok) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected {what}")))
        }
    }

    fn number(&mut self) -> Result<Rational> {
        match self.peek() {
            Some(Tok::Num(q)) => {
                let q = q.clone();
                self.pos += 1;
                Ok(q)
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let q = self.number()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(q)
            }
            _ => Err(self.error("expected a number")),
        }
    }

    fn atom(&mut self, mono: &mut RawMonomial) -> Result<()> {
        match self.peek().cloned() {
            Some(Tok::Num(q)) => {
                self.pos += 1;
                mono.0 += q;
                Ok(())
            }
            Some(Tok::Var(index, indexed)) => {
                if *self.style.get_or_insert(indexed) != indexed {
                    return Err(self.error("cannot mix x, y, z with indexed variables"));
                }
                self.pos += 1;
                self.max_var = Some(self.max_var.map_or(index, |m| m.max(index)));
                let power = if self.peek() == Some(&Tok::Caret) {
                    self.pos += 1;
                    self.number()?
                } else {
                    rational::one()
                };
                *mono.1.entry(index).or_insert_with(Rational::zero) += power;
                Ok(())
            }
            _ => Err(self.error("expected a number or a variable")),
        }
    }

    fn term(&mut self) -> Result<RawMonomial> {
        let mut mono = (Rational::zero(), BTreeMap::new());
        self.atom(&mut mono)?;
        while self.peek() == Some(&Tok::Star) && !matches!(self.toks.get(self.pos + 1).map(|t| &t.tok), Some(Tok::LParen)) {
            self.pos += 1;
            self.atom(&mut mono)?;
        }
        Ok(mono)
    }

    fn sig(&mut self) -> Result<Vec<RawMonomial>> {
        let mut terms = vec![self.term()?];
        while self.peek() == Some(&Tok::Plus) {
            self.pos += 1;
            terms.push(self.term()?);
        }
        Ok(terms)
    }

    fn fact(&mut self) -> Result<Vec<Vec<RawMonomial>>> {
        if self.peek() != Some(&Tok::LParen) {
            return Ok(vec![self.sig()?]);
        }
        let mut factors = Vec::new();
        loop {
            self.expect(Tok::LParen, "'('")?;
            factors.push(self.sig()?);
            self.expect(Tok::RParen, "')'")?;
            if self.peek() == Some(&Tok::Star) {
                self.pos += 1;
            } else {
                return Ok(factors);
            }
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.toks.len()
    }

    fn finish(&self) -> Result<()> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.error("unexpected trailing input"))
        }
    }

    fn dimension(&self, requested: Option<usize>) -> Result<usize> {
        let needed = self.max_var.map_or(1, |m| m + 1);
        match requested {
            Some(d) if d < needed => Err(Error::Parse {
                line: 1,
                column: 1,
                message: format!("input uses {needed} variables but dimension {d} was requested"),
            }),
            Some(d) => Ok(d),
            None => Ok(needed),
        }
    }
}

fn build(raw: Vec<RawMonomial>, dim: usize) -> Result<Signomial> {
    Signomial::new(
        dim,
        raw.into_iter().map(|(c, exps)| {
            let mut exp = vec![Rational::zero(); dim];
            for (i, e) in exps {
                exp[i] = e;
            }
            Monomial::new(c, exp)
        }),
    )
}

fn build_fact(raw: Vec<Vec<RawMonomial>>, dim: usize) -> Result<Factorization> {
    Factorization::new(raw.into_iter().map(|s| build(s, dim)).collect::<Result<_>>()?)
}

pub fn parse_signomial(text: &str, dim: Option<usize>) -> Result<Signomial> {
    let mut p = Parser::new(text, false)?;
    let raw = p.sig()?;
    p.finish()?;
    let d = p.dimension(dim)?;
    build(raw, d)
}

/// Accepts a bare signomial (one factor) or parenthesized factors joined by `*`.
pub fn parse_factorization(text: &str, dim: Option<usize>) -> Result<Factorization> {
    let mut p = Parser::new(text, false)?;
    let raw = p.fact()?;
    p.finish()?;
    let d = p.dimension(dim)?;
    build_fact(raw, d)
}

/// `num / den`; without a slash the denominator is the constant `0`.
pub fn parse_rational_rep(text: &str, dim: Option<usize>) -> Result<RationalRep> {
    let mut p = Parser::new(text, false)?;
    let num = p.fact()?;
    let den = if p.peek() == Some(&Tok::Slash) {
        p.pos += 1;
        Some(p.fact()?)
    } else {
        None
    };
    p.finish()?;
    let d = p.dimension(dim)?;
    let denominator = match den {
        Some(raw) => build_fact(raw, d)?,
        None => Factorization::single(Signomial::constant(d, Rational::zero())),
    };
    RationalRep::new(build_fact(num, d)?, denominator)
}

/// Signomials separated by `;` or line breaks, sharing one dimension.
pub fn parse_signomial_list(text: &str, dim: Option<usize>) -> Result<Vec<Signomial>> {
    let mut p = Parser::new(text, true)?;
    let mut raws = Vec::new();
    loop {
        while p.peek() == Some(&Tok::Sep) {
            p.pos += 1;
        }
        if p.at_end() {
            break;
        }
        raws.push(p.sig()?);
        if !p.at_end() && p.peek() != Some(&Tok::Sep) {
            return Err(p.error("expected ';' or a line break between signomials"));
        }
    }
    if raws.is_empty() {
        return Err(p.error("expected at least one signomial"));
    }
    let d = p.dimension(dim)?;
    raws.into_iter().map(|r| build(r, d)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    #[test]
    fn parses_the_two_variable_example() {
        let g = parse_signomial("1*x*y^-1 + 1*y^-2 + 1*x^-1*y^-1 + 1 + y", None).unwrap();
        assert_eq!(g.dim(), 2);
        assert_eq!(g.len(), 5);
        assert_eq!(g.coefficient(&[int(0), int(-2)]), Some(&int(1)));
    }

    #[test]
    fn tight_slash_is_a_literal() {
        let s = parse_signomial("x + 1/2", None).unwrap();
        assert_eq!(s.coefficient(&[int(0)]), Some(&frac(1, 2)));
        let r = parse_rational_rep("x + 1 / 2", None).unwrap();
        assert_eq!(r.denominator.factors()[0].coefficient(&[int(0)]), Some(&int(2)));
        let e = parse_signomial("x^1/2", None).unwrap();
        assert_eq!(e.monomials()[0].exp, vec![frac(1, 2)]);
    }

    #[test]
    fn factorizations_and_quotients() {
        let r = parse_rational_rep("(x + 0)*(y + 0) / (x + y + 0)", None).unwrap();
        assert_eq!(r.numerator.factors().len(), 2);
        assert_eq!(r.denominator.factors().len(), 1);
        assert_eq!(r.evaluate(&[int(2), int(1)]).unwrap(), int(1));
    }

    #[test]
    fn indexed_variables_and_decimals() {
        let s = parse_signomial("0.5*x1*x3^2 + x2", None).unwrap();
        assert_eq!(s.dim(), 3);
        assert_eq!(s.coefficient(&[int(1), int(0), int(2)]), Some(&frac(1, 2)));
        assert!(parse_signomial("x + x2", None).is_err());
    }

    #[test]
    fn errors_carry_positions() {
        match parse_signomial("x +\n  * y", None) {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 3)),
            other => panic!("unexpected {other:?}"),
        }
        match parse_signomial("x + ", None) {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (1, 5)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn lists_share_a_dimension() {
        let list = parse_signomial_list("x + 0\ny + 0; x + y", None).unwrap();
        assert_eq!(list.len(), 3);
        assert!(list.iter().all(|s| s.dim() == 2));
    }
}
