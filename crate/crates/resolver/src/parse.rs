//! Text input for polynomials and ideals.
//!
//! Grammar (whitespace is ignored between tokens):
//!
//! ```text
//! poly   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := integer ['/' integer] | name ['^' integer]
//! ideal  := poly (',' poly)*
//! ```

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rncbetti_core::Rational;

use crate::error::{ResolverError, Result};
use crate::poly::{Monomial, Poly2};

/// Variable names accepted by the parser, each mapped to a slot index.
#[derive(Debug, Clone)]
pub struct Variables {
    count: usize,
    names: Vec<(String, usize)>,
}

impl Variables {
    pub fn new(names: &[&str]) -> Self {
        Self {
            count: names.len(),
            names: names.iter().enumerate().map(|(k, n)| (n.to_string(), k)).collect(),
        }
    }

    /// `x, y`.
    pub fn xy() -> Self {
        Self::new(&["x", "y"])
    }

    /// The `d + 1` coordinates of `B`: `a0 .. ad` always, and additionally
    /// `a, b, c, ...` when `d <= 3`.
    pub fn veronese(d: u32) -> Self {
        let count = d as usize + 1;
        let mut names: Vec<(String, usize)> = (0..count).map(|k| (format!("a{k}"), k)).collect();
        if d <= 3 {
            names.extend(["a", "b", "c", "d"].iter().take(count).enumerate().map(|(k, n)| (n.to_string(), k)));
        }
        Self { count, names }
    }

    pub fn len(&self) -> usize {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().find(|(n, _)| n == name).map(|(_, k)| *k)
    }

    /// Preferred display name of slot `k`.
    pub fn name(&self, k: usize) -> &str {
        self.names
            .iter()
            .rev()
            .find(|(_, j)| *j == k)
            .map(|(n, _)| n.as_str())
            .unwrap_or("?")
    }
}

/// Polynomial in any number of variables with rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparsePoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl SparsePoly {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: &Rational) {
        debug_assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exps.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rational)> + '_ {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Common total degree of all terms, if there is one.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn to_poly2(&self) -> Result<Poly2> {
        if self.nvars != 2 {
            return Err(ResolverError::WrongVariableCount { expected: 2, found: self.nvars });
        }
        Ok(Poly2::from_terms(
            self.terms.iter().map(|(e, c)| (Monomial::new(e[0], e[1]), c.clone())),
        ))
    }

    pub fn display<'a>(&'a self, vars: &'a Variables) -> impl fmt::Display + 'a {
        DisplaySparse { poly: self, vars }
    }
}

struct DisplaySparse<'a> {
    poly: &'a SparsePoly,
    vars: &'a Variables,
}

impl fmt::Display for DisplaySparse<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (e, c)) in self.poly.terms.iter().rev().enumerate() {
            let neg = *c < Rational::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            let sep = match (n, neg) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            };
            write!(f, "{sep}")?;
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(v, &k)| {
                    let name = self.vars.name(v);
                    if k == 1 { name.to_string() } else { format!("{name}^{k}") }
                })
                .collect();
            match (mono.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{mag}")?,
                (false, true) => write!(f, "{}", mono.join("*"))?,
                (false, false) => write!(f, "{mag}*{}", mono.join("*"))?,
            }
        }
        Ok(())
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    vars: &'a Variables,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn error(&self, message: impl Into<String>) -> ResolverError {
        ResolverError::Syntax { position: self.pos, message: message.into() }
    }

    fn eat(&mut self, want: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(want) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        Ok(self.src[start..self.pos].parse().expect("digits"))
    }

    fn exponent(&mut self) -> Result<u32> {
        let at = self.pos;
        let n = self.integer()?;
        u32::try_from(n).map_err(|_| ResolverError::Syntax { position: at, message: "exponent too large".into() })
    }

    fn factor(&mut self, coeff: &mut Rational, exps: &mut [u32]) -> Result<()> {
        self.skip_ws();
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let mut value = Rational::from_integer(num);
                if self.eat('/') {
                    let at = self.pos;
                    let den = self.integer()?;
                    if den.is_zero() {
                        return Err(ResolverError::Syntax { position: at, message: "zero denominator".into() });
                    }
                    value /= Rational::from_integer(den);
                }
                *coeff *= value;
                Ok(())
            }
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                let start = self.pos;
                while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == '_') {
                    self.pos += 1;
                }
                let name = &self.src[start..self.pos];
                let slot = self.vars.index(name).ok_or_else(|| ResolverError::UnknownVariable {
                    name: name.to_string(),
                    position: start,
                })?;
                let power = if self.eat('^') { self.exponent()? } else { 1 };
                exps[slot] += power;
                Ok(())
            }
            Some(c) => Err(self.error(format!("unexpected character '{c}'"))),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn term(&mut self, sign: Rational) -> Result<(Vec<u32>, Rational)> {
        let mut coeff = sign;
        let mut exps = vec![0; self.vars.len()];
        self.factor(&mut coeff, &mut exps)?;
        while self.eat('*') {
            self.factor(&mut coeff, &mut exps)?;
        }
        Ok((exps, coeff))
    }

    fn poly(&mut self) -> Result<SparsePoly> {
        let mut out = SparsePoly::zero(self.vars.len());
        let mut sign = if self.eat('-') {
            -Rational::one()
        } else {
            self.eat('+');
            Rational::one()
        };
        loop {
            let (exps, c) = self.term(sign)?;
            out.add_term(exps, &c);
            if self.eat('+') {
                sign = Rational::one();
            } else if self.eat('-') {
                sign = -Rational::one();
            } else {
                break;
            }
        }
        Ok(out)
    }
}

/// Parses a single polynomial over `vars`.
pub fn parse_polynomial(src: &str, vars: &Variables) -> Result<SparsePoly> {
    parse_at(src, 0, vars)
}

fn parse_at(src: &str, offset: usize, vars: &Variables) -> Result<SparsePoly> {
    let mut p = Parser { src, pos: 0, vars };
    let poly = p.poly().map_err(|e| e.shifted(offset))?;
    p.skip_ws();
    if p.pos != src.len() {
        return Err(p.error("trailing input").shifted(offset));
    }
    Ok(poly)
}

/// Parses a comma-separated list of polynomials.
pub fn parse_ideal(src: &str, vars: &Variables) -> Result<Vec<SparsePoly>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for piece in src.split(',') {
        out.push(parse_at(piece, offset, vars)?);
        offset += piece.len() + 1;
    }
    Ok(out)
}
