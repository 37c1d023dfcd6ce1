//! Parser for polynomial and rational-function expressions in `q`.
//!
//! Accepts integers, `q`, `+ - * / ^`, parentheses, and juxtaposition as
//! multiplication (`2q`, `q^2(q-1)`). Exponents are non-negative integers.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{PolynomialQ, QFieldError, RationalFunctionQ};

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Num(BigInt),
    Q,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(src: &str) -> Result<Vec<(usize, Token)>, QFieldError> {
    let mut out = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let tok = match c {
            ' ' | '\t' | '\n' => {
                i += 1;
                continue;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                out.push((start, Token::Num(digits.parse().expect("digits"))));
                continue;
            }
            'q' => Token::Q,
            '+' => Token::Plus,
            '-' | '\u{2212}' => Token::Minus,
            '*' | '\u{b7}' => Token::Star,
            '/' => Token::Slash,
            '^' => Token::Caret,
            '(' => Token::LParen,
            ')' => Token::RParen,
            other => {
                return Err(QFieldError::Parse {
                    input: src.to_string(),
                    reason: format!("unexpected character {other:?} at {i}"),
                })
            }
        };
        out.push((i, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a str,
    tokens: Vec<(usize, Token)>,
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, reason: impl Into<String>) -> QFieldError {
        QFieldError::Parse {
            input: self.src.to_string(),
            reason: reason.into(),
        }
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<RationalFunctionQ, QFieldError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Some(Token::Minus) => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RationalFunctionQ, QFieldError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.bump();
                    acc = &acc * &self.unary()?;
                }
                Some(Token::Slash) => {
                    self.bump();
                    let rhs = self.unary()?;
                    acc = acc.checked_div(&rhs)?;
                }
                Some(Token::Num(_) | Token::Q | Token::LParen) => {
                    acc = &acc * &self.power()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<RationalFunctionQ, QFieldError> {
        match self.peek() {
            Some(Token::Minus) => {
                self.bump();
                Ok(-self.unary()?)
            }
            Some(Token::Plus) => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<RationalFunctionQ, QFieldError> {
        let base = self.atom()?;
        if self.peek() != Some(&Token::Caret) {
            return Ok(base);
        }
        self.bump();
        match self.bump() {
            Some(Token::Num(n)) => {
                let exp: usize = n.try_into().map_err(|_| self.err("exponent too large"))?;
                Ok(base.pow(exp))
            }
            _ => Err(self.err("expected a non-negative integer exponent after '^'")),
        }
    }

    fn atom(&mut self) -> Result<RationalFunctionQ, QFieldError> {
        match self.bump() {
            Some(Token::Num(n)) => Ok(RationalFunctionQ::from_rational(BigRational::from_integer(
                n,
            ))),
            Some(Token::Q) => Ok(PolynomialQ::q().into()),
            Some(Token::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Token::RParen) => Ok(inner),
                    _ => Err(self.err("unbalanced parenthesis")),
                }
            }
            Some(t) => Err(self.err(format!("unexpected token {t:?}"))),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

/// Parse an element of `Q(q)`.
pub fn parse_rational_function(src: &str) -> Result<RationalFunctionQ, QFieldError> {
    let tokens = tokenize(src)?;
    let mut parser = Parser {
        src,
        tokens,
        pos: 0,
    };
    if parser.peek().is_none() {
        return Err(parser.err("empty expression"));
    }
    let value = parser.expr()?;
    if parser.pos < parser.tokens.len() {
        let at = parser.tokens[parser.pos].0;
        return Err(parser.err(format!("trailing input at {at}")));
    }
    Ok(value)
}

/// Parse a polynomial; rejects expressions that do not reduce to one.
pub fn parse_polynomial(src: &str) -> Result<PolynomialQ, QFieldError> {
    let f = parse_rational_function(src)?;
    f.as_polynomial()
        .cloned()
        .ok_or_else(|| QFieldError::Parse {
            input: src.to_string(),
            reason: "expression is not a polynomial".into(),
        })
}

impl std::str::FromStr for PolynomialQ {
    type Err = QFieldError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_polynomial(s)
    }
}

impl std::str::FromStr for RationalFunctionQ {
    type Err = QFieldError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_rational_function(s)
    }
}
