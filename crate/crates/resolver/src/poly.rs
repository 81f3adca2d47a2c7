//! Polynomials in `S = k[x,y]` over the rationals.
//!
//! Monomials are ordered graded-lexicographically with `x > y`; in two
//! variables this is also graded reverse lexicographic.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use rncbetti_core::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    pub x: u32,
    pub y: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { x: 0, y: 0 };

    pub fn new(x: u32, y: u32) -> Self {
        Self { x, y }
    }

    pub fn degree(self) -> u32 {
        self.x + self.y
    }

    pub fn divides(self, other: Monomial) -> bool {
        self.x <= other.x && self.y <= other.y
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(self, other: Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial::new(other.x - self.x, other.y - self.y)
    }

    pub fn lcm(self, other: Monomial) -> Monomial {
        Monomial::new(self.x.max(other.x), self.y.max(other.y))
    }

    pub fn is_coprime(self, other: Monomial) -> bool {
        (self.x == 0 || other.x == 0) && (self.y == 0 || other.y == 0)
    }
}

impl Mul for Monomial {
    type Output = Monomial;
    fn mul(self, rhs: Monomial) -> Monomial {
        Monomial::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then(self.x.cmp(&other.x))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (name, e) in [("x", self.x), ("y", self.y)] {
            match e {
                0 => {}
                1 => parts.push(name.to_string()),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// Sparse polynomial in `x, y`; only nonzero coefficients are stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Poly2 {
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(c, Monomial::ONE)
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut p = Self::zero();
        p.add_term(m, &c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: Monomial) -> Rational {
        self.terms.get(&m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (Monomial, &Rational)> + '_ {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<(Monomial, &Rational)> {
        self.terms.last_key_value().map(|(m, c)| (*m, c))
    }

    pub fn leading_monomial(&self) -> Option<Monomial> {
        self.terms.last_key_value().map(|(m, _)| *m)
    }

    /// Degree of the leading monomial.
    pub fn degree(&self) -> Option<u32> {
        self.leading_monomial().map(Monomial::degree)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Nonzero and of degree zero.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms.contains_key(&Monomial::ONE)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect() }
    }

    /// `c·m·self`
    pub fn mul_term(&self, c: &Rational, m: Monomial) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(k, v)| (*k * m, v * c)).collect() }
    }

    /// `self += c·m·other`
    pub fn add_scaled(&mut self, c: &Rational, m: Monomial, other: &Poly2) {
        if c.is_zero() {
            return;
        }
        for (k, v) in &other.terms {
            self.add_term(*k * m, &(v * c));
        }
    }

    /// Scales so the leading coefficient is one.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some((_, c)) => self.scale(&(Rational::one() / c)),
        }
    }

    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        self.terms
            .iter()
            .map(|(m, c)| c * x.pow(m.x as i32) * y.pow(m.y as i32))
            .sum()
    }
}

impl Add for &Poly2 {
    type Output = Poly2;
    fn add(self, rhs: &Poly2) -> Poly2 {
        let mut out = self.clone();
        out.add_scaled(&Rational::one(), Monomial::ONE, rhs);
        out
    }
}

impl Sub for &Poly2 {
    type Output = Poly2;
    fn sub(self, rhs: &Poly2) -> Poly2 {
        let mut out = self.clone();
        out.add_scaled(&-Rational::one(), Monomial::ONE, rhs);
        out
    }
}

impl Neg for &Poly2 {
    type Output = Poly2;
    fn neg(self) -> Poly2 {
        self.scale(&-Rational::one())
    }
}

impl Mul for &Poly2 {
    type Output = Poly2;
    fn mul(self, rhs: &Poly2) -> Poly2 {
        let mut out = Poly2::zero();
        for (m, c) in &self.terms {
            out.add_scaled(c, *m, rhs);
        }
        out
    }
}

impl fmt::Display for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (n, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if *m == Monomial::ONE {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

/// Multivariate division of `p` by `divisors`: returns quotients `q` and
/// remainder `r` with `p = Σ q_k·divisors_k + r`, where no term of `r` is
/// divisible by a leading monomial of a divisor.
pub fn divide(p: &Poly2, divisors: &[Poly2]) -> (Vec<Poly2>, Poly2) {
    let mut quotients = vec![Poly2::zero(); divisors.len()];
    let mut remainder = Poly2::zero();
    let mut rest = p.clone();
    while let Some((m, c)) = rest.leading().map(|(m, c)| (m, c.clone())) {
        let hit = divisors.iter().enumerate().find_map(|(k, g)| {
            let (lm, lc) = g.leading()?;
            lm.divides(m).then(|| (k, lm.quotient_of(m), &c / lc))
        });
        match hit {
            Some((k, shift, factor)) => {
                quotients[k].add_term(shift, &factor);
                rest.add_scaled(&-factor, shift, &divisors[k]);
            }
            None => {
                remainder.add_term(m, &c);
                rest.add_term(m, &-c);
            }
        }
    }
    (quotients, remainder)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rncbetti_core::{frac, int};

    fn x() -> Poly2 {
        Poly2::term(int(1), Monomial::new(1, 0))
    }

    fn y() -> Poly2 {
        Poly2::term(int(1), Monomial::new(0, 1))
    }

    #[test]
    fn grlex_order() {
        assert!(Monomial::new(1, 0) > Monomial::new(0, 1));
        assert!(Monomial::new(0, 3) > Monomial::new(2, 0));
        assert!(Monomial::new(2, 1) > Monomial::new(1, 2));
    }

    #[test]
    fn arithmetic_and_display() {
        let p = &(&x() * &x()) - &(&y() * &y());
        let q = &(&x() + &y()) * &(&x() - &y());
        assert_eq!(p, q);
        assert_eq!(p.to_string(), "x^2 - y^2");
        assert_eq!(p.scale(&frac(-1, 2)).to_string(), "-1/2*x^2 + 1/2*y^2");
        assert!((&p - &q).is_zero());
        assert!(p.is_homogeneous());
        assert!(!(&p + &x()).is_homogeneous());
    }

    #[test]
    fn division_identity() {
        let f = Poly2::from_terms([(Monomial::new(3, 0), int(1)), (Monomial::new(1, 2), int(1))]);
        let divisors = vec![x(), &y() * &y()];
        let (q, r) = divide(&f, &divisors);
        let mut back = r.clone();
        for (qk, g) in q.iter().zip(&divisors) {
            back = &back + &(qk * g);
        }
        assert_eq!(back, f);
        assert!(r.is_zero());
    }
}
