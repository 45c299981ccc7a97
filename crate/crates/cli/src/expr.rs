//! Polynomial expressions: integers, two variables, `+ - * ^` and parentheses.

use std::fmt;

use num_bigint::BigInt;
use polar_core::{BivariatePolynomial, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// Character offset into the source, counted from 0.
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at position {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

/// A parsed expression together with its source text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolynomialExpression {
    pub source: String,
    pub polynomial: BivariatePolynomial,
}

impl PolynomialExpression {
    pub fn parse(source: &str) -> Result<Self, ParseError> {
        Ok(Self { source: source.to_string(), polynomial: parse(source)? })
    }
}

/// Parses an expression in `X` and `Y`.
pub fn parse(source: &str) -> Result<BivariatePolynomial, ParseError> {
    parse_in(source, ["X", "Y"])
}

/// Parses an expression whose first and second variables are named `vars`.
pub fn parse_in(source: &str, vars: [&str; 2]) -> Result<BivariatePolynomial, ParseError> {
    let tokens = tokenize(source)?;
    let mut p = Parser { tokens, at: 0, vars, end: source.chars().count() };
    let f = p.sum()?;
    match p.peek() {
        None => Ok(f),
        Some(t) => Err(p.error_at(t.pos, format!("unexpected {}", t.kind))),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Kind {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Open,
    Close,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Kind::Int(n) => write!(f, "number {n}"),
            Kind::Ident(s) => write!(f, "identifier {s}"),
            Kind::Plus => f.write_str("'+'"),
            Kind::Minus => f.write_str("'-'"),
            Kind::Star => f.write_str("'*'"),
            Kind::Caret => f.write_str("'^'"),
            Kind::Open => f.write_str("'('"),
            Kind::Close => f.write_str("')'"),
        }
    }
}

#[derive(Clone, Debug)]
struct Token {
    kind: Kind,
    pos: usize,
}

fn tokenize(source: &str) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = source.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let pos = i;
        let single = match c {
            '+' => Some(Kind::Plus),
            '-' | '\u{2212}' => Some(Kind::Minus),
            '*' => Some(Kind::Star),
            '^' => Some(Kind::Caret),
            '(' => Some(Kind::Open),
            ')' => Some(Kind::Close),
            _ => None,
        };
        if let Some(kind) = single {
            out.push(Token { kind, pos });
            i += 1;
        } else if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[pos..i].iter().collect();
            out.push(Token { kind: Kind::Int(digits.parse().expect("ascii digits")), pos });
        } else if c.is_alphabetic() || c == '_' {
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token { kind: Kind::Ident(chars[pos..i].iter().collect()), pos });
        } else {
            return Err(ParseError { position: pos, message: format!("unexpected character {c:?}") });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    at: usize,
    vars: [&'a str; 2],
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.at)
    }

    fn error_at(&self, position: usize, message: String) -> ParseError {
        ParseError { position, message }
    }

    fn eat(&mut self, kind: &Kind) -> bool {
        if self.peek().is_some_and(|t| t.kind == *kind) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn sum(&mut self) -> Result<BivariatePolynomial, ParseError> {
        let mut acc = self.product()?;
        loop {
            if self.eat(&Kind::Plus) {
                acc = &acc + &self.product()?;
            } else if self.eat(&Kind::Minus) {
                acc = &acc - &self.product()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn product(&mut self) -> Result<BivariatePolynomial, ParseError> {
        let mut acc = self.unary()?;
        while self.eat(&Kind::Star) {
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<BivariatePolynomial, ParseError> {
        if self.eat(&Kind::Minus) {
            return Ok(-&self.unary()?);
        }
        if self.eat(&Kind::Plus) {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<BivariatePolynomial, ParseError> {
        let base = self.atom()?;
        if !self.eat(&Kind::Caret) {
            return Ok(base);
        }
        match self.peek().cloned() {
            Some(Token { kind: Kind::Int(n), pos }) => {
                self.at += 1;
                let e: u32 = n
                    .try_into()
                    .map_err(|_| self.error_at(pos, "exponent is too large".into()))?;
                if self.peek().is_some_and(|t| t.kind == Kind::Caret) {
                    let pos = self.peek().unwrap().pos;
                    return Err(self.error_at(pos, "chained '^' needs parentheses".into()));
                }
                Ok(base.pow(e))
            }
            Some(t) => Err(self.error_at(t.pos, format!("exponent must be a nonnegative integer, found {}", t.kind))),
            None => Err(self.error_at(self.end, "missing exponent".into())),
        }
    }

    fn atom(&mut self) -> Result<BivariatePolynomial, ParseError> {
        let Some(t) = self.peek().cloned() else {
            return Err(self.error_at(self.end, "unexpected end of input".into()));
        };
        self.at += 1;
        match t.kind {
            Kind::Int(n) => Ok(BivariatePolynomial::constant(Rational::from_integer(n))),
            Kind::Ident(name) if name == self.vars[0] => Ok(BivariatePolynomial::x()),
            Kind::Ident(name) if name == self.vars[1] => Ok(BivariatePolynomial::y()),
            Kind::Ident(name) => Err(self.error_at(
                t.pos,
                format!("unknown variable {name}; expected {} or {}", self.vars[0], self.vars[1]),
            )),
            Kind::Open => {
                let inner = self.sum()?;
                if self.eat(&Kind::Close) {
                    Ok(inner)
                } else {
                    let pos = self.peek().map_or(self.end, |t| t.pos);
                    Err(self.error_at(pos, format!("missing ')' for '(' at position {}", t.pos)))
                }
            }
            other => Err(self.error_at(t.pos, format!("unexpected {other}"))),
        }
    }
}
