//! Pure diagrams over `S` and over `B`.
//!
//! A pure `B`-type `(d0, d1, d2; ℓ)` records the generator degrees of the
//! first three steps together with which indecomposable maximal
//! Cohen–Macaulay module `M^(ℓ)` sits at the second syzygy. Its canonical
//! table is
//!
//! ```text
//! β0 = d(d2-d1) - ℓ,   β1 = d(d2-d0) - ℓ,   β2 = d(d1-d0)(ℓ+1),
//! β3 = β2·dℓ/(ℓ+1)   at degree d2 + 1.
//! ```
//!
//! Every other scalar multiple describes the same ray; all coefficients
//! reported by this crate are relative to this normalization.

use std::fmt;

use num_integer::Integer;
use num_traits::One;

use crate::error::{BettiError, Result};
use crate::rational::{frac, int, Rational};
use crate::table::{BBettiTable, SBettiTable};

/// Degree sequence of a pure resolution over `B`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PureTypeB {
    d: u32,
    degrees: [i64; 3],
    ell: u32,
}

impl PureTypeB {
    pub fn new(d: u32, d0: i64, d1: i64, d2: i64, ell: u32) -> Result<Self> {
        if d == 0 {
            return Err(BettiError::DegreeTooSmall { d, min: 1 });
        }
        if !(d0 < d1 && d1 < d2) {
            return Err(BettiError::InvalidPureType(format!(
                "degrees must increase strictly, got ({d0}, {d1}, {d2})"
            )));
        }
        if ell >= d {
            return Err(BettiError::InvalidPureType(format!(
                "ell must lie in 0..={}, got {ell}",
                d - 1
            )));
        }
        Ok(Self { d, degrees: [d0, d1, d2], ell })
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn degrees(&self) -> [i64; 3] {
        self.degrees
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    /// The matching `S`-degree sequence `(d·d0, d·d1, d·d2 - ℓ)`.
    pub fn s_degrees(&self) -> [i64; 3] {
        let d = i64::from(self.d);
        let [d0, d1, d2] = self.degrees;
        [d * d0, d * d1, d * d2 - i64::from(self.ell)]
    }
}

impl fmt::Display for PureTypeB {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [d0, d1, d2] = self.degrees;
        write!(f, "({d0},{d1},{d2};{})", self.ell)
    }
}

/// Degree sequence of a pure resolution over `S` of codimension two.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PureTypeS {
    degrees: [i64; 3],
}

impl PureTypeS {
    pub fn new(e0: i64, e1: i64, e2: i64) -> Result<Self> {
        if !(e0 < e1 && e1 < e2) {
            return Err(BettiError::InvalidPureType(format!(
                "degrees must increase strictly, got ({e0}, {e1}, {e2})"
            )));
        }
        Ok(Self { degrees: [e0, e1, e2] })
    }

    pub fn degrees(&self) -> [i64; 3] {
        self.degrees
    }

    /// Entrywise comparison of degree sequences.
    pub fn leq(&self, other: &Self) -> bool {
        self.degrees.iter().zip(other.degrees.iter()).all(|(a, b)| a <= b)
    }
}

impl fmt::Display for PureTypeS {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [e0, e1, e2] = self.degrees;
        write!(f, "({e0},{e1},{e2})")
    }
}

/// Canonical Betti table of the pure type `p`, including column 3.
pub fn pure_betti_b(p: &PureTypeB) -> BBettiTable {
    let d = i64::from(p.d);
    let ell = i64::from(p.ell);
    let [d0, d1, d2] = p.degrees;
    let b0 = d * (d2 - d1) - ell;
    let b1 = d * (d2 - d0) - ell;
    let b2 = d * (d1 - d0) * (ell + 1);
    let b3 = int(b2) * frac(d * ell, ell + 1);
    let mut t = BBettiTable::new(p.d).expect("d >= 1 checked by PureTypeB");
    let cells = [(0, d0, int(b0)), (1, d1, int(b1)), (2, d2, int(b2)), (3, d2 + 1, b3)];
    for (i, j, v) in cells {
        t.set(i, j, v).expect("columns 0..=3");
    }
    t
}

/// Primitive positive integer Betti table of the pure `S`-type `p`.
///
/// Solves `β0 - β1 + β2 = 0` and `e0β0 - e1β1 + e2β2 = 0`; the solution line is
/// spanned by `(e2-e1, e2-e0, e1-e0)`.
pub fn pure_betti_s(p: &PureTypeS) -> SBettiTable {
    let [e0, e1, e2] = p.degrees;
    let raw = [e2 - e1, e2 - e0, e1 - e0];
    let g = raw.iter().fold(0i64, |g, &v| g.gcd(&v));
    let mut t = SBettiTable::new();
    for (i, (&e, &v)) in p.degrees.iter().zip(raw.iter()).enumerate() {
        t.set(i, e, int(v / g)).expect("columns 0..=2");
    }
    t
}

/// The partial order on pure `B`-types inherited from `S`-degree sequences:
/// `p <= q` iff `d0 <= d0'`, `d1 <= d1'` and `d·d2 - ℓ <= d·d2' - ℓ'`.
pub fn pure_leq(p: &PureTypeB, q: &PureTypeB) -> Result<bool> {
    if p.d != q.d {
        return Err(BettiError::MismatchedDegree { left: p.d, right: q.d });
    }
    let (a, b) = (p.s_degrees(), q.s_degrees());
    Ok(a.iter().zip(b.iter()).all(|(x, y)| x <= y))
}

/// Splits the type `(d0,d1,d2;ℓ)` into the extremal types with `ℓ = 0` and
/// `ℓ = d-1`:
///
/// `β(…;ℓ) = (1 - ℓ/(d-1))·β(…;0) + ℓ/(d-1)·β(…;d-1)`,
///
/// which holds in every column, the tail included.
pub fn apply_redundancy(
    d: u32,
    d0: i64,
    d1: i64,
    d2: i64,
    ell: u32,
) -> Result<[(Rational, PureTypeB); 2]> {
    if d < 2 {
        return Err(BettiError::DegreeTooSmall { d, min: 2 });
    }
    // Validates ell and the degrees.
    PureTypeB::new(d, d0, d1, d2, ell)?;
    let w = frac(i64::from(ell), i64::from(d) - 1);
    Ok([
        (Rational::one() - &w, PureTypeB::new(d, d0, d1, d2, 0)?),
        (w, PureTypeB::new(d, d0, d1, d2, d - 1)?),
    ])
}

/// Entrywise linear combination of `B`-tables over a common ring.
pub fn linear_combination(terms: &[(Rational, BBettiTable)]) -> Result<BBettiTable> {
    let (_, first) = terms.first().ok_or(BettiError::EmptyCombination)?;
    let mut acc = BBettiTable::new(first.d())?;
    for (c, t) in terms {
        acc.axpy(c, t)?;
    }
    Ok(acc)
}
