//! Parser for polynomial expressions.
//!
//! Accepts the canonical text form as well as ordinary hand-written
//! expressions (`4*(-1 + b + bp)*rho^2`), which is how the reference
//! polynomials are entered. Grammar:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*      // '/' only by a constant
//! unary  := '-' unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | variable | '(' expr ')'
//! ```

use num_bigint::BigInt;
use num_rational::BigRational;

use super::poly::{MultiPoly, Variable};
use super::ArithError;

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, ArithError> {
    let mut tokens = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let ch = chars[i];
        let tok = match ch {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '+' => Token::Plus,
            '-' => Token::Minus,
            '*' => Token::Star,
            '/' => Token::Slash,
            '^' => Token::Caret,
            '(' => Token::LParen,
            ')' => Token::RParen,
            c if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                tokens.push((start, Token::Int(digits.parse().expect("ascii digits"))));
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                    i += 1;
                }
                tokens.push((start, Token::Ident(chars[start..i].iter().collect())));
                continue;
            }
            other => {
                return Err(ArithError::Parse {
                    pos: i,
                    msg: format!("unexpected character {other:?}"),
                })
            }
        };
        tokens.push((i, tok));
        i += 1;
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ArithError> {
        Err(ArithError::Parse {
            pos: self.offset(),
            msg: msg.into(),
        })
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<MultiPoly, ArithError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.bump();
                    acc += &self.term()?;
                }
                Some(Token::Minus) => {
                    self.bump();
                    acc -= &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly, ArithError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.bump();
                    acc = &acc * &self.unary()?;
                }
                Some(Token::Slash) => {
                    self.bump();
                    let at = self.offset();
                    let divisor = self.unary()?;
                    match divisor.as_constant() {
                        Some(c) if c != BigRational::from_integer(0.into()) => {
                            acc = acc.scale(&(BigRational::from_integer(1.into()) / c));
                        }
                        _ => {
                            return Err(ArithError::Parse {
                                pos: at,
                                msg: "division only by a non-zero constant".into(),
                            })
                        }
                    }
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<MultiPoly, ArithError> {
        if let Some(Token::Minus) = self.peek() {
            self.bump();
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<MultiPoly, ArithError> {
        let base = self.atom()?;
        if let Some(Token::Caret) = self.peek() {
            self.bump();
            return match self.bump() {
                Some(Token::Int(e)) => {
                    let e = i64::try_from(e).or_else(|_| self.err("exponent too large"))?;
                    base.pow(e)
                }
                _ => self.err("expected integer exponent"),
            };
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MultiPoly, ArithError> {
        match self.bump() {
            Some(Token::Int(n)) => Ok(MultiPoly::constant(BigRational::from_integer(n))),
            Some(Token::Ident(name)) => match Variable::from_name(&name) {
                Some(v) => Ok(MultiPoly::var(v)),
                None => {
                    self.pos -= 1;
                    self.err(format!("unknown variable {name:?}"))
                }
            },
            Some(Token::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Token::RParen) => Ok(inner),
                    _ => {
                        self.pos -= 1;
                        self.err("expected ')'")
                    }
                }
            }
            _ => {
                self.pos = self.pos.saturating_sub(1);
                self.err("expected a number, variable or '('")
            }
        }
    }
}

pub fn parse_poly(text: &str) -> Result<MultiPoly, ArithError> {
    let tokens = tokenize(text)?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        end: text.len(),
    };
    let poly = parser.expr()?;
    if parser.pos < parser.tokens.len() {
        return parser.err("trailing input");
    }
    Ok(poly)
}

impl std::str::FromStr for MultiPoly {
    type Err = ArithError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_poly(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::{int, rat};

    #[test]
    fn parses_canonical_forms() {
        let m = MultiPoly::var(Variable::M);
        assert_eq!(parse_poly("0").unwrap(), MultiPoly::zero());
        assert_eq!(parse_poly("m^3 + (-1)*m").unwrap(), m.pow(3).unwrap() - &m);
        assert_eq!(
            parse_poly("(1/12)*m^3").unwrap(),
            m.pow(3).unwrap().scale(&rat(1, 12))
        );
        assert_eq!(parse_poly("(-3)").unwrap(), MultiPoly::integer(-3));
    }

    #[test]
    fn parses_hand_written_expressions() {
        let p = parse_poly("-2*rho*(1 + rho)*(b - bp) - 3/4").unwrap();
        let rho = MultiPoly::var(Variable::Rho);
        let diff = MultiPoly::var(Variable::B) - MultiPoly::var(Variable::Bp);
        let expected = (rho.scale(&int(-2)) * (MultiPoly::one() + &rho)) * diff
            - MultiPoly::constant(rat(3, 4));
        assert_eq!(p, expected);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse_poly("x + 1").is_err());
        assert!(parse_poly("(a + b").is_err());
        assert!(parse_poly("a / b").is_err());
        assert!(parse_poly("a / 0").is_err());
        assert!(parse_poly("a ^ -1").is_err());
        assert!(parse_poly("a b").is_err());
        assert!(parse_poly("").is_err());
        assert!(parse_poly("a + 1.5").is_err());
    }
}
