//! Hilbert numerators of `B`-tables.
//!
//! `B` has Hilbert series `(1 + (d-1)t)/(1-t)^2`. Summing the resolution of a
//! finite-length module, the tail past column 3 telescopes into column 3, so
//! the module's Hilbert series is `N(t)/(1-t)^2` with
//!
//! ```text
//! N(t) = (Σ_{i<=2,j} (-1)^i β_{i,j} t^j)·(1 + (d-1)t) - Σ_j β_{3,j} t^j.
//! ```

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{BettiError, Result};
use crate::rational::{int, Rational};
use crate::table::BBettiTable;

/// Univariate Laurent polynomial in `t` with rational coefficients. Only
/// nonzero coefficients are stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: BTreeMap<i64, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_coeffs<I: IntoIterator<Item = (i64, Rational)>>(coeffs: I) -> Self {
        let mut p = Self::zero();
        for (k, c) in coeffs {
            p.add_term(k, &c);
        }
        p
    }

    /// Dense constructor: `coeffs[k]` is the coefficient of `t^k`.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().enumerate().map(|(k, &c)| (k as i64, int(c))))
    }

    pub fn add_term(&mut self, exp: i64, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(exp).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn coeff(&self, exp: i64) -> Rational {
        self.coeffs.get(&exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> + '_ {
        self.coeffs.iter().map(|(&k, c)| (k, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        self.coeffs.iter().map(|(&k, c)| c * t.pow(k as i32)).sum()
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|(&k, c)| (k - 1, c * int(k))))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&a, x) in &self.coeffs {
            for (&b, y) in &other.coeffs {
                out.add_term(a + b, &(x * y));
            }
        }
        out
    }

    /// Exact quotient by `1 - t`, or `None` when `1 - t` does not divide.
    pub fn div_one_minus_t(&self) -> Option<Self> {
        // N = (1 - t) q  ⇔  q_k = Σ_{i<=k} n_i, and the full sum vanishes.
        let (Some((&lo, _)), Some((&hi, _))) =
            (self.coeffs.first_key_value(), self.coeffs.last_key_value())
        else {
            return Some(Self::zero());
        };
        let mut q = Self::zero();
        let mut running = Rational::zero();
        for k in lo..hi {
            running += self.coeff(k);
            q.add_term(k, &running);
        }
        running += self.coeff(hi);
        running.is_zero().then_some(q)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.values().all(|c| *c >= Rational::zero())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (n, (&k, c)) in self.coeffs.iter().enumerate() {
            let neg = *c < Rational::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            match (n, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if k == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// The numerator `N(t)` of the Hilbert series of a finite-length module with
/// Betti table `t`.
pub fn hilbert_numerator(t: &BBettiTable) -> Polynomial {
    let mut alternating = Polynomial::zero();
    for (i, j, v) in t.entries().filter(|(i, _, _)| *i <= 2) {
        let signed = if i % 2 == 0 { v.clone() } else { -v.clone() };
        alternating.add_term(j, &signed);
    }
    let ring = Polynomial::from_ints(&[1, i64::from(t.d()) - 1]);
    let mut n = alternating.mul(&ring);
    for (j, v) in t.column(3) {
        n.add_term(j, &-v.clone());
    }
    n
}

/// The Hilbert function `N(t)/(1-t)^2` of a finite-length module with Betti
/// table `t`, as a (Laurent) polynomial.
pub fn hilbert_polynomial(t: &BBettiTable) -> Result<Polynomial> {
    let n = hilbert_numerator(t);
    n.div_one_minus_t()
        .and_then(|q| q.div_one_minus_t())
        .ok_or(BettiError::NotFiniteLength { numerator: n })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pure::{pure_betti_b, PureTypeB};

    fn worked_table() -> BBettiTable {
        BBettiTable::from_ints(3, &[(0, 0, 1), (1, 1, 1), (1, 2, 2), (2, 3, 5), (3, 4, 9)]).unwrap()
    }

    #[test]
    fn numerator_of_intermediate_pure_type() {
        let t = pure_betti_b(&PureTypeB::new(3, 0, 2, 3, 1).unwrap());
        let n = hilbert_numerator(&t);
        assert_eq!(n, Polynomial::from_ints(&[2, 4, -8, -4, 6]));
        assert!(n.eval(&int(1)).is_zero());
        assert!(n.derivative().eval(&int(1)).is_zero());
    }

    #[test]
    fn zero_table_has_zero_numerator() {
        assert!(hilbert_numerator(&BBettiTable::new(4).unwrap()).is_zero());
        assert!(hilbert_polynomial(&BBettiTable::new(4).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn worked_module() {
        let t = worked_table();
        assert_eq!(hilbert_numerator(&t), Polynomial::from_ints(&[1, 1, -4, 1, 1]));
        assert_eq!(hilbert_polynomial(&t).unwrap(), Polynomial::from_ints(&[1, 3, 1]));
    }

    #[test]
    fn ring_itself_is_not_finite_length() {
        let b = BBettiTable::from_ints(3, &[(0, 0, 1)]).unwrap();
        assert!(matches!(hilbert_polynomial(&b), Err(BettiError::NotFiniteLength { .. })));
    }

    #[test]
    fn top_pure_type_has_nonnegative_hilbert_function() {
        let t = pure_betti_b(&PureTypeB::new(3, 0, 1, 3, 2).unwrap());
        let h = hilbert_polynomial(&t).unwrap();
        assert!(h.is_nonnegative());
        assert!(!h.is_zero());
    }

    #[test]
    fn division_handles_negative_exponents() {
        // t^-2 (1-t)^2 (3 + t)
        let p = Polynomial::from_coeffs([(-2, int(1)), (-1, int(-2)), (0, int(1))])
            .mul(&Polynomial::from_ints(&[3, 1]));
        let q = p.div_one_minus_t().unwrap().div_one_minus_t().unwrap();
        assert_eq!(q, Polynomial::from_coeffs([(-2, int(3)), (-1, int(1))]));
        assert!(Polynomial::from_ints(&[1, 1]).div_one_minus_t().is_none());
    }

    #[test]
    fn display() {
        assert_eq!(Polynomial::from_ints(&[1, 3, -1]).to_string(), "1 + 3*t - t^2");
        assert_eq!(Polynomial::zero().to_string(), "0");
    }
}
