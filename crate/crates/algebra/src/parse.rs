//! Text syntax: `2*x1^2 - 1/3*x0*x1`.

use crate::error::{AlgebraError, Result};
use crate::poly::Polynomial;
use crate::scalar::Scalar;

/// Parses a polynomial whose variables are looked up in `names`; variable
/// `names[i]` becomes index `i`.
pub fn parse_polynomial(text: &str, names: &[String]) -> Result<Polynomial> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        names,
    };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(out)
}

/// Parses over `x0..x{nvars-1}`.
pub fn parse_x(text: &str, nvars: usize) -> Result<Polynomial> {
    parse_polynomial(text, &crate::poly::default_names(nvars))
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    names: &'a [String],
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> AlgebraError {
        AlgebraError::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn n(&self) -> usize {
        self.names.len()
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -self.term()?
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.power()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let d = self.power()?;
                    if !d.is_constant() || d.is_zero() {
                        return Err(self.err("division only by nonzero constants"));
                    }
                    acc = acc.scale(&d.constant_term().recip());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            if start == self.pos {
                return Err(self.err("expected exponent"));
            }
            let e: u32 = std::str::from_utf8(&self.src[start..self.pos])
                .unwrap()
                .parse()
                .map_err(|_| self.err("exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let v: num::BigInt = digits.parse().map_err(|_| self.err("bad integer"))?;
                Ok(Polynomial::constant(self.n(), Scalar::from_integer(v)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                match self.names.iter().position(|n| n == name) {
                    Some(i) => Ok(Polynomial::var(self.n(), i)),
                    None => {
                        self.pos = start;
                        Err(self.err(&format!("unknown variable '{name}'")))
                    }
                }
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

/// Parses a coordinate list such as `1, 2, 1/3` or `[1:2]`.
pub fn parse_scalar_list(text: &str) -> Result<Vec<Scalar>> {
    let t = text.trim().trim_start_matches('[').trim_end_matches(']');
    let mut out = Vec::new();
    let mut offset = 0usize;
    for piece in t.split([',', ':']) {
        match crate::scalar::parse_scalar(piece) {
            Some(v) => out.push(v),
            None => {
                return Err(AlgebraError::Parse {
                    pos: offset,
                    msg: format!("bad coordinate '{}'", piece.trim()),
                })
            }
        }
        offset += piece.len() + 1;
    }
    Ok(out)
}
