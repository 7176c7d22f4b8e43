//! Text grammar for polynomials.
//!
//! Variables are `x{j}_{i}` (generator `j`, level `i`), or a generator name
//! from a [`VarNames`] table, optionally suffixed `_{i}` for higher levels.
//! Numbers are integers; `p/q` is ordinary division by a constant. Operators
//! are `+ - * / ^` with the usual precedence, and parentheses group.

use num_bigint::BigInt;
use num_traits::Zero;

use super::monomial::{Monomial, VarId};
use super::poly::Polynomial;
use super::Scalar;
use crate::error::Error;

/// Optional human names for generators, indexed from 1.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VarNames {
    names: Vec<String>,
}

impl VarNames {
    pub fn new(names: Vec<String>) -> Result<Self, Error> {
        for (i, n) in names.iter().enumerate() {
            if !is_valid_name(n) {
                return Err(Error::InvalidName(n.clone()));
            }
            if names[..i].contains(n) {
                return Err(Error::InvalidName(format!("{n} (duplicate)")));
            }
        }
        Ok(VarNames { names })
    }

    pub fn from_strs(names: &[&str]) -> Result<Self, Error> {
        Self::new(names.iter().map(|s| s.to_string()).collect())
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn lookup(&self, name: &str) -> Option<u32> {
        self.names.iter().position(|n| n == name).map(|i| i as u32 + 1)
    }

    pub fn name_of(&self, generator: u32) -> Option<&str> {
        self.names.get(generator as usize - 1).map(String::as_str)
    }

    pub fn render_var(&self, v: VarId) -> String {
        match self.name_of(v.generator) {
            Some(n) if v.level == 1 => n.to_string(),
            Some(n) => format!("{n}_{}", v.level),
            None => v.to_string(),
        }
    }

    pub fn render_monomial(&self, m: &Monomial) -> String {
        if m.is_one() {
            return "1".into();
        }
        m.exponents()
            .iter()
            .map(|&(v, e)| {
                if e == 1 {
                    self.render_var(v)
                } else {
                    format!("{}^{e}", self.render_var(v))
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

fn is_valid_name(n: &str) -> bool {
    let mut chars = n.chars();
    let starts = matches!(chars.next(), Some(c) if c.is_ascii_alphabetic());
    starts
        && n.chars().all(|c| c.is_ascii_alphanumeric())
        && parse_x_var(n).is_none()
}

// `x{j}` with no level suffix; reserved so names never shadow the raw syntax.
fn parse_x_var(ident: &str) -> Option<u32> {
    let digits = ident.strip_prefix('x')?;
    if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    digits.parse().ok()
}

pub fn parse_polynomial(text: &str, names: &VarNames) -> Result<Polynomial, Error> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, names };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(out)
}

/// Parses `n`, `-n` or `p/q`.
pub fn parse_scalar(text: &str) -> Result<Scalar, Error> {
    let p = parse_polynomial(text, &VarNames::default())?;
    if !p.is_constant() {
        return Err(Error::parse(1, 1, format!("expected a rational number, found `{}`", text.trim())));
    }
    Ok(p.constant_term())
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    names: &'a VarNames,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::parse(1, self.pos + 1, msg.to_string())
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

    fn expr(&mut self) -> Result<Polynomial, Error> {
        let mut acc = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if c == b'+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial, Error> {
        let mut acc = self.unary()?;
        while let Some(c @ (b'*' | b'/')) = self.peek() {
            let at = self.pos;
            self.pos += 1;
            let rhs = self.unary()?;
            if c == b'*' {
                acc = &acc * &rhs;
            } else {
                if !rhs.is_constant() || rhs.is_zero() {
                    self.pos = at;
                    return Err(self.err("division is only allowed by a nonzero constant"));
                }
                acc = acc.scale(&rhs.constant_term().recip());
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial, Error> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial, Error> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            let digits = self.take_while(|c| c.is_ascii_digit());
            if digits.is_empty() {
                self.pos = start;
                return Err(self.err("expected a non-negative integer exponent"));
            }
            let e: u32 = digits.parse().map_err(|_| {
                Error::parse(1, start + 1, "exponent too large".to_string())
            })?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn take_while(&mut self, f: impl Fn(u8) -> bool) -> String {
        let start = self.pos;
        while self.pos < self.src.len() && f(self.src[self.pos]) {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn atom(&mut self) -> Result<Polynomial, Error> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let digits = self.take_while(|c| c.is_ascii_digit());
                let n: BigInt = digits.parse().expect("digit run parses");
                Ok(Polynomial::constant(Scalar::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                let ident = self.take_while(|c| c.is_ascii_alphanumeric() || c == b'_');
                self.resolve(&ident).map_err(|msg| Error::parse(1, start + 1, msg))
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn resolve(&self, ident: &str) -> Result<Polynomial, String> {
        let (head, level) = match ident.rsplit_once('_') {
            Some((h, l)) => {
                let level: u32 = l.parse().map_err(|_| format!("bad level suffix in `{ident}`"))?;
                (h, level)
            }
            None => (ident, 1),
        };
        if level.is_zero() {
            return Err(format!("levels start at 1 in `{ident}`"));
        }
        let generator = match parse_x_var(head) {
            Some(j) if j >= 1 => j,
            Some(_) => return Err(format!("generators start at 1 in `{ident}`")),
            None => self.names.lookup(head).ok_or_else(|| format!("unknown variable `{ident}`"))?,
        };
        Ok(Polynomial::var(VarId::new(generator, level)))
    }
}
