//! Parser for rational expressions in `u`, `v`.
//!
//! Accepts the canonical rendering and ordinary hand-written forms: `+ - * / ^`,
//! parentheses, implicit multiplication of adjacent factors, integer literals
//! and the variables `u`, `v` and `q = u*v`; adjacent letters multiply, so
//! `uv^4` is `u*v^4` while `(uv)^4` is `u^4*v^4`.
//! Any divisor must factor as `c * (uv)^t * prod ((uv)^m - 1)`.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::bipoly::BiPoly;
use super::qpoly::QPoly;
use super::stringy::StringyRational;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(s: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut pos = 0;
    while pos < chars.len() {
        let c = chars[pos];
        match c {
            c if c.is_whitespace() => pos += 1,
            '0'..='9' => {
                let start = pos;
                while pos < chars.len() && chars[pos].is_ascii_digit() {
                    pos += 1;
                }
                let lit: String = chars[start..pos].iter().collect();
                out.push(Token::Num(lit.parse().expect("digits")));
            }
            c if c.is_ascii_alphabetic() => {
                // One letter per variable, so `uv^4` is `u * v^4`.
                pos += 1;
                out.push(Token::Ident(c.to_string()));
            }
            _ => {
                out.push(match c {
                    '+' => Token::Plus,
                    '-' => Token::Minus,
                    '*' => Token::Star,
                    '/' => Token::Slash,
                    '^' => Token::Caret,
                    '(' => Token::LParen,
                    ')' => Token::RParen,
                    other => return Err(Error::Parse(format!("unexpected character `{other}`"))),
                });
                pos += 1;
            }
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect(&mut self, t: Token) -> Result<()> {
        match self.next() {
            Some(ref got) if *got == t => Ok(()),
            got => Err(Error::Parse(format!("expected {t:?}, found {got:?}"))),
        }
    }

    fn expr(&mut self) -> Result<StringyRational> {
        let mut acc = self.term()?;
        while let Some(t) = self.peek() {
            match t {
                Token::Plus => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Token::Minus => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<StringyRational> {
        let mut acc = self.juxtaposition()?;
        while let Some(t) = self.peek() {
            match t {
                Token::Star => {
                    self.pos += 1;
                    acc = &acc * &self.juxtaposition()?;
                }
                Token::Slash => {
                    self.pos += 1;
                    let divisor = self.juxtaposition()?;
                    acc = &acc * &invert(&divisor)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn juxtaposition(&mut self) -> Result<StringyRational> {
        let mut acc = self.unary()?;
        while matches!(self.peek(), Some(Token::LParen | Token::Ident(_) | Token::Num(_))) {
            acc = &acc * &self.power()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<StringyRational> {
        match self.peek() {
            Some(Token::Minus) => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(Token::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<StringyRational> {
        let base = self.atom()?;
        if self.peek() != Some(&Token::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let exponent = self.exponent()?;
        pow(&base, exponent)
    }

    fn exponent(&mut self) -> Result<i64> {
        let (negative, parenthesized) = match self.peek() {
            Some(Token::LParen) => {
                self.pos += 1;
                let neg = if self.peek() == Some(&Token::Minus) {
                    self.pos += 1;
                    true
                } else {
                    false
                };
                (neg, true)
            }
            Some(Token::Minus) => {
                self.pos += 1;
                (true, false)
            }
            _ => (false, false),
        };
        let n = match self.next() {
            Some(Token::Num(n)) => i64::try_from(n).map_err(|_| Error::Parse("exponent too large".into()))?,
            got => return Err(Error::Parse(format!("expected an integer exponent, found {got:?}"))),
        };
        if parenthesized {
            self.expect(Token::RParen)?;
        }
        Ok(if negative { -n } else { n })
    }

    fn atom(&mut self) -> Result<StringyRational> {
        match self.next() {
            Some(Token::Num(n)) => Ok(BiPoly::constant(BigRational::from_integer(n)).into()),
            Some(Token::Ident(name)) => {
                let mut p = BiPoly::one();
                for c in name.chars() {
                    p = p * match c {
                        'u' => BiPoly::u(),
                        'v' => BiPoly::v(),
                        'q' => BiPoly::q_pow(1),
                        other => return Err(Error::Parse(format!("unknown variable `{other}`"))),
                    };
                }
                Ok(p.into())
            }
            Some(Token::LParen) => {
                let e = self.expr()?;
                self.expect(Token::RParen)?;
                Ok(e)
            }
            got => Err(Error::Parse(format!("unexpected token {got:?}"))),
        }
    }
}

fn pow(base: &StringyRational, exponent: i64) -> Result<StringyRational> {
    let b = if exponent < 0 { invert(base)? } else { base.clone() };
    Ok((0..exponent.unsigned_abs()).fold(StringyRational::one(), |acc, _| &acc * &b))
}

/// Splits a polynomial into `c * (uv)^t * prod ((uv)^m - 1)`.
fn factor_q_polynomial(p: &BiPoly) -> Option<(BigRational, i64, Vec<u32>)> {
    let mut rest = p.as_q_poly()?;
    let low = rest.low_degree()?;
    rest = rest.shift(-low);
    let mut factors = Vec::new();
    while rest.degree()? > 0 {
        let m = rest.terms().map(|(&e, _)| e).find(|&e| e > 0)?;
        let divisor = &QPoly::power(m) - &QPoly::one();
        rest = rest.exact_div(&divisor).ok()?;
        factors.push(m as u32);
    }
    Some((rest.coeff(0), low, factors))
}

/// Multiplicative inverse of a value whose numerator factors into
/// cyclotomic-type binomials.
fn invert(x: &StringyRational) -> Result<StringyRational> {
    if x.is_zero() {
        return Err(Error::Parse("division by zero".into()));
    }
    let (c, t, factors) = factor_q_polynomial(x.numerator()).ok_or_else(|| {
        Error::Parse(format!(
            "divisor `{}` is not a product of (uv)^m - 1 factors and a power of uv",
            x.numerator()
        ))
    })?;
    let numerator = x.expanded_denominator().scale(&c.recip());
    Ok(StringyRational::new(numerator, factors, -x.q_shift() - t))
}

/// Parses an expression into a rational function.
pub fn parse_expression(s: &str) -> Result<StringyRational> {
    let tokens = tokenize(s)?;
    if tokens.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut p = Parser { tokens, pos: 0 };
    let value = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(Error::Parse(format!("trailing input at token {:?}", p.tokens[p.pos])));
    }
    Ok(value)
}

/// Parses a polynomial; fails if the expression has a nontrivial denominator.
pub fn parse_polynomial(s: &str) -> Result<BiPoly> {
    let value = parse_expression(s)?;
    value
        .try_into_polynomial()
        .map_err(|_| Error::Parse(format!("`{s}` is not a polynomial")))
}

impl FromStr for StringyRational {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_expression(s)
    }
}

impl FromStr for BiPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_polynomial(s)
    }
}


#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_canonical_rendering() {
        let f = StringyRational::new(
            BiPoly::from_int_terms(&[(2, 1, -255), (1, 1, 5), (0, 0, -4)]),
            vec![5, 7],
            -3,
        );
        let back: StringyRational = f.to_string().parse().unwrap();
        assert!(back.cross_equal(&f));
    }

    #[test]
    fn parses_hand_written_forms() {
        let f: StringyRational = "(uv-1)/((uv)^7-1) * (5(uv)^10 + 1)".parse().unwrap();
        let expected = StringyRational::new(
            (BiPoly::q_pow(10).scale(&BigRational::from_integer(5.into())) + BiPoly::one())
                * BiPoly::q_pow_minus_one(1),
            vec![7],
            0,
        );
        assert!(f.cross_equal(&expected));
        let p: BiPoly = "-5u^3 - 3/2*v".parse().unwrap();
        assert_eq!(p.coeff(3, 0), BigRational::from_integer((-5).into()));
        assert_eq!(p.coeff(0, 1), BigRational::new((-3).into(), 2.into()));
    }

    #[test]
    fn rejects_unsupported_denominators() {
        assert!(matches!("1/(u+1)".parse::<StringyRational>(), Err(Error::Parse(_))));
        assert!(matches!("1/0".parse::<StringyRational>(), Err(Error::Parse(_))));
        assert!(matches!("u +".parse::<StringyRational>(), Err(Error::Parse(_))));
        assert!(matches!("x".parse::<StringyRational>(), Err(Error::Parse(_))));
        assert!("1/(uv-1)".parse::<BiPoly>().is_err());
    }

    #[test]
    fn divisor_factorization() {
        let p = BiPoly::q_pow(1) * BiPoly::q_pow_minus_one(2) * BiPoly::q_pow_minus_one(3);
        let (c, t, f) = factor_q_polynomial(&p.scale(&BigRational::from_integer(2.into()))).unwrap();
        assert_eq!((c, t, f), (BigRational::from_integer(2.into()), 1, vec![2, 3]));
    }
}
