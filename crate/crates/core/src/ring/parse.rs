use num_bigint::BigInt;
use num_traits::Zero;

use super::{Monomial, Polynomial, Rational, Variable};
use crate::error::{Error, Result};

/// Parses the textual polynomial grammar.
///
/// Terms are joined by `+`/`-`; a term is a `*`-separated product of
/// rationals (`p` or `p/q`) and powers `var^e`. Variables are `x<i>_<j>`
/// (`x_i^(j)`), `xi<m>`, `al<m>_<j>`, `E<m>` and `y_<k>`. Whitespace is
/// ignored and positions in errors refer to the original text.
pub fn parse(text: &str) -> Result<Polynomial> {
    let tokens: Vec<(usize, char)> = text
        .char_indices()
        .filter(|(_, c)| !c.is_whitespace())
        .collect();
    let mut parser = Parser {
        tokens,
        pos: 0,
        len: text.len(),
    };
    parser.polynomial()
}

struct Parser {
    tokens: Vec<(usize, char)>,
    pos: usize,
    len: usize,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.tokens.get(self.pos).map(|(_, c)| *c)
    }

    fn offset(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|(i, _)| *i)
            .unwrap_or(self.len)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            position: self.offset(),
            message: message.into(),
        })
    }

    fn polynomial(&mut self) -> Result<Polynomial> {
        if self.peek().is_none() {
            return self.error("empty input");
        }
        let mut out = Polynomial::zero();
        let mut first = true;
        while self.peek().is_some() {
            let negative = match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    false
                }
                Some('-') => {
                    self.pos += 1;
                    true
                }
                _ if first => false,
                Some(c) => return self.error(format!("expected `+` or `-`, found `{c}`")),
                None => unreachable!(),
            };
            let term = self.term()?;
            out = if negative { out - term } else { out + term };
            first = false;
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut coeff = Rational::from_integer(1.into());
        let mut powers: Vec<(Variable, u32)> = Vec::new();
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => coeff *= self.rational()?,
                Some(c) if c.is_ascii_alphabetic() => powers.push(self.power()?),
                Some(c) => return self.error(format!("expected a factor, found `{c}`")),
                None => return self.error("expected a factor, found end of input"),
            }
            if self.peek() == Some('*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok(Polynomial::term(coeff, Monomial::from_powers(powers)))
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        let mut digits = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            digits.push(c);
            self.pos += 1;
        }
        if digits.is_empty() {
            self.pos = start;
            return self.error("expected digits");
        }
        Ok(digits.parse().expect("ascii digits"))
    }

    fn rational(&mut self) -> Result<Rational> {
        let num = self.integer()?;
        if self.peek() == Some('/') {
            self.pos += 1;
            let den_at = self.pos;
            let den = self.integer()?;
            if den.is_zero() {
                self.pos = den_at;
                return self.error("zero denominator");
            }
            return Ok(Rational::new(num, den));
        }
        Ok(Rational::from_integer(num))
    }

    fn power(&mut self) -> Result<(Variable, u32)> {
        let start = self.offset();
        let mut name = String::new();
        while let Some(c) = self
            .peek()
            .filter(|c| c.is_ascii_alphanumeric() || *c == '_')
        {
            name.push(c);
            self.pos += 1;
        }
        let var = variable_from_token(&name).ok_or(Error::UnknownVariable {
            name,
            position: start,
        })?;
        let mut exponent = 1;
        if self.peek() == Some('^') {
            self.pos += 1;
            let e = self.integer()?;
            exponent = u32::try_from(e).or_else(|_| self.error("exponent too large"))?;
        }
        Ok((var, exponent))
    }
}

fn number(s: &str) -> Option<u32> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

fn positive(s: &str) -> Option<u32> {
    number(s).filter(|v| *v > 0)
}

fn pair(s: &str) -> Option<(&str, &str)> {
    s.split_once('_')
}

/// Maps a variable token to its variable, if the token is well formed.
pub(crate) fn variable_from_token(token: &str) -> Option<Variable> {
    if let Some(rest) = token.strip_prefix("xi") {
        return positive(rest).map(Variable::Xi);
    }
    if let Some(rest) = token.strip_prefix("al") {
        let (m, j) = pair(rest)?;
        return Some(Variable::Alpha {
            set: positive(m)?,
            family: positive(j)?,
        });
    }
    if let Some(rest) = token.strip_prefix("y_") {
        return number(rest).map(Variable::Y);
    }
    if let Some(rest) = token.strip_prefix('E') {
        return positive(rest).map(Variable::Exp);
    }
    if let Some(rest) = token.strip_prefix('x') {
        let (i, j) = pair(rest)?;
        return Some(Variable::x(positive(i)?, number(j)?));
    }
    None
}
