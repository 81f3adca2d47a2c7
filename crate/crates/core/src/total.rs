//! The cone of total Betti vectors `(b0, b1, b2, b3)`.
//!
//! Its closure is cut out by
//!
//! ```text
//! b3 >= 0,   b2 - b3/(d-1) >= 0,   b1 - b2 + b3/d >= 0,   b0 - b1 + b2 - b3/d >= 0
//! ```
//!
//! and spanned by `(1,0,0,0)`, `(1,1,0,0)`, `(0,1,1,0)` and `(0,1,d,d(d-1))`.
//! The last two rays are limits, not totals of actual modules.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{BettiError, Result};
use crate::pure::{pure_betti_b, PureTypeB};
use crate::rational::{int, Rational};
use crate::table::BBettiTable;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TotalVector {
    pub d: u32,
    pub b: [Rational; 4],
}

impl TotalVector {
    pub fn new(d: u32, b: [Rational; 4]) -> Self {
        Self { d, b }
    }

    pub fn from_ints(d: u32, b: [i64; 4]) -> Self {
        Self { d, b: b.map(int) }
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        Self { d: self.d, b: self.b.clone().map(|x| x * c) }
    }

    /// Whether `self = c·other` for some rational `c > 0`.
    pub fn is_positive_multiple_of(&self, other: &Self) -> bool {
        let Some(k) = other.b.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let c = &self.b[k] / &other.b[k];
        c.is_positive() && *self == other.scaled(&c)
    }
}

impl fmt::Display for TotalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, e] = &self.b;
        write!(f, "({a}, {b}, {c}, {e})")
    }
}

/// Column sums of columns 0 through 3.
pub fn total_vector(t: &BBettiTable) -> TotalVector {
    TotalVector { d: t.d(), b: [0, 1, 2, 3].map(|i| t.total(i)) }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Membership {
    pub inside: bool,
    /// Values of the four defining forms, in the order listed in the module docs.
    pub slacks: [Rational; 4],
}

impl Membership {
    pub fn tight(&self) -> usize {
        self.slacks.iter().filter(|s| s.is_zero()).count()
    }
}

/// Evaluates the four inequalities exactly. Requires `d >= 2`.
pub fn tot_membership(v: &TotalVector) -> Result<Membership> {
    if v.d < 2 {
        return Err(BettiError::DegreeTooSmall { d: v.d, min: 2 });
    }
    let d = int(i64::from(v.d));
    let [b0, b1, b2, b3] = &v.b;
    let slacks = [
        b3.clone(),
        b2 - b3 / (&d - int(1)),
        b1 - b2 + b3 / &d,
        b0 - b1 + b2 - b3 / &d,
    ];
    let inside = slacks.iter().all(|s| !s.is_negative());
    Ok(Membership { inside, slacks })
}

/// The four extremal rays of the closed cone.
pub fn tot_rays(d: u32) -> Result<[TotalVector; 4]> {
    if d < 2 {
        return Err(BettiError::DegreeTooSmall { d, min: 2 });
    }
    let dd = i64::from(d);
    Ok([
        TotalVector::from_ints(d, [1, 0, 0, 0]),
        TotalVector::from_ints(d, [1, 1, 0, 0]),
        TotalVector::from_ints(d, [0, 1, 1, 0]),
        TotalVector::from_ints(d, [0, 1, dd, dd * (dd - 1)]),
    ])
}

/// Families of pure modules whose totals approach the two boundary rays.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Type `(0, t, t+1; 0)`, tending to `(0,1,1,0)`.
    Mt,
    /// Type `(0, td, td+1; d-1)`, tending to `(0,1,d,d(d-1))`.
    Nt,
}

impl Family {
    pub fn pure_type(self, t: u32, d: u32) -> Result<PureTypeB> {
        let (tt, dd) = (i64::from(t), i64::from(d));
        match self {
            Family::Mt => PureTypeB::new(d, 0, tt, tt + 1, 0),
            Family::Nt => PureTypeB::new(d, 0, tt * dd, tt * dd + 1, d - 1),
        }
    }
}

/// Total vector of the `t`-th member of `family`, rescaled so that `b0 = 1`.
pub fn limit_vector(family: Family, t: u32, d: u32) -> Result<TotalVector> {
    if t < 1 {
        return Err(BettiError::InvalidPureType("family index t must be >= 1".into()));
    }
    if d < 2 {
        return Err(BettiError::DegreeTooSmall { d, min: 2 });
    }
    let v = total_vector(&pure_betti_b(&family.pure_type(t, d)?));
    let b0 = v.b[0].clone();
    Ok(v.scaled(&(int(1) / b0)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    #[test]
    fn worked_totals() {
        let t = BBettiTable::from_ints(3, &[(0, 0, 1), (1, 1, 1), (1, 2, 2), (2, 3, 5), (3, 4, 9)])
            .unwrap();
        assert_eq!(total_vector(&t), TotalVector::from_ints(3, [1, 3, 5, 9]));
        let m = tot_membership(&total_vector(&t)).unwrap();
        assert!(m.inside);
        assert_eq!(m.slacks, [int(9), frac(1, 2), int(1), int(0)]);
    }

    #[test]
    fn totals_of_zero_and_pure() {
        assert_eq!(total_vector(&BBettiTable::new(3).unwrap()), TotalVector::from_ints(3, [0; 4]));
        let p = PureTypeB::new(3, 0, 2, 3, 2).unwrap();
        assert_eq!(total_vector(&pure_betti_b(&p)), TotalVector::from_ints(3, [1, 7, 18, 36]));
    }

    #[test]
    fn column_three_alone_is_outside() {
        let m = tot_membership(&TotalVector::from_ints(3, [0, 0, 0, 1])).unwrap();
        assert!(!m.inside);
        assert!(m.slacks[1].is_negative());
        assert!(tot_membership(&TotalVector::from_ints(1, [1, 0, 0, 0])).is_err());
    }

    #[test]
    fn rays() {
        let r = tot_rays(3).unwrap();
        assert_eq!(r[3], TotalVector::from_ints(3, [0, 1, 3, 6]));
        assert_eq!(tot_rays(2).unwrap()[3], TotalVector::from_ints(2, [0, 1, 2, 2]));
        for d in 2..=7 {
            for ray in tot_rays(d).unwrap() {
                let m = tot_membership(&ray).unwrap();
                assert!(m.inside);
                assert_eq!(m.tight(), 3, "{ray} over d={d}");
            }
        }
        assert!(tot_rays(1).is_err());
    }

    #[test]
    fn limit_examples() {
        assert_eq!(limit_vector(Family::Mt, 4, 3).unwrap(), TotalVector::from_ints(3, [1, 5, 4, 0]));
        assert_eq!(limit_vector(Family::Nt, 1, 3).unwrap(), TotalVector::from_ints(3, [1, 10, 27, 54]));
        assert!(limit_vector(Family::Mt, 0, 3).is_err());
    }

    #[test]
    fn nt_recedes_along_the_last_ray() {
        let (t, d) = (1000u32, 3u32);
        let v = limit_vector(Family::Nt, t, d).unwrap();
        let mut shifted = v.clone();
        shifted.b[0] -= int(1);
        shifted.b[1] -= int(1);
        let ray = tot_rays(d).unwrap()[3].clone();
        assert!(shifted.is_positive_multiple_of(&ray));
        assert_eq!(shifted, ray.scaled(&int(i64::from(t * d * d))));
    }
}
