//! Necessary conditions on a `B`-table coming from the structure of its
//! second syzygy module.
//!
//! For each degree `j` the second syzygy splits into blocks `M^(ℓ)(-j)` with
//! multiplicities `b_{ℓ,j}`. Writing `s0_j = Σ b_{ℓ,j}` and `s1_j = Σ ℓ·b_{ℓ,j}`,
//! the table determines
//!
//! ```text
//! s0_j = β_{2,j} - β_{3,j+1}/d,     s1_j = β_{3,j+1}/d,
//! ```
//!
//! and any genuine module has `s0_j >= 0` and `0 <= s1_j <= (d-1)·s0_j`.

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};

use crate::rational::{int, Rational};
use crate::table::BBettiTable;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    NegativeEntry { col: usize, degree: i64 },
    NegativeS0,
    NegativeS1,
    S1ExceedsBound,
    /// `β_{3,j+1}` is not an integer multiple of `d`.
    NotDivisible,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeCheck {
    pub degree: i64,
    pub s0: Rational,
    pub s1: Rational,
    pub violations: Vec<Violation>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub d: u32,
    pub negative_entries: Vec<Violation>,
    pub degrees: Vec<DegreeCheck>,
}

impl ValidationReport {
    pub fn passes(&self) -> bool {
        self.negative_entries.is_empty() && self.degrees.iter().all(|c| c.violations.is_empty())
    }

    pub fn violations(&self) -> impl Iterator<Item = (Option<i64>, &Violation)> + '_ {
        self.negative_entries
            .iter()
            .map(|v| (None, v))
            .chain(self.degrees.iter().flat_map(|c| c.violations.iter().map(move |v| (Some(c.degree), v))))
    }
}

/// Per-degree class invariants of `t` and every inequality they violate.
/// With `integrality` set, also flags column-3 entries not divisible by `d`.
pub fn validate_b_table(t: &BBettiTable, integrality: bool) -> ValidationReport {
    let d = int(i64::from(t.d()));
    let bound = &d - int(1);

    let negative_entries = t
        .entries()
        .filter(|(_, _, v)| v.is_negative())
        .map(|(col, degree, _)| Violation::NegativeEntry { col, degree })
        .collect();

    let degrees: BTreeSet<i64> = t
        .column(2)
        .map(|(j, _)| j)
        .chain(t.column(3).map(|(j, _)| j - 1))
        .collect();

    let degrees = degrees
        .into_iter()
        .map(|j| {
            let beta3 = t.get(3, j + 1);
            let s1 = &beta3 / &d;
            let s0 = t.get(2, j) - &s1;
            let mut violations = Vec::new();
            if s0.is_negative() {
                violations.push(Violation::NegativeS0);
            }
            if s1.is_negative() {
                violations.push(Violation::NegativeS1);
            }
            if s1 > &bound * &s0 {
                violations.push(Violation::S1ExceedsBound);
            }
            if integrality && !s1.is_integer() {
                violations.push(Violation::NotDivisible);
            }
            DegreeCheck { degree: j, s0, s1, violations }
        })
        .collect();

    ValidationReport { d: t.d(), negative_entries, degrees }
}

impl DegreeCheck {
    pub fn is_trivial(&self) -> bool {
        self.s0.is_zero() && self.s1.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pure::{pure_betti_b, PureTypeB};

    #[test]
    fn worked_table_passes() {
        let t = BBettiTable::from_ints(3, &[(0, 0, 1), (1, 1, 1), (1, 2, 2), (2, 3, 5), (3, 4, 9)])
            .unwrap();
        let report = validate_b_table(&t, true);
        assert!(report.passes());
        let c = &report.degrees[0];
        assert_eq!((c.degree, c.s0.clone(), c.s1.clone()), (3, int(2), int(3)));
    }

    #[test]
    fn too_much_column_three_is_flagged() {
        let t = BBettiTable::from_ints(3, &[(2, 3, 1), (3, 4, 3)]).unwrap();
        let report = validate_b_table(&t, false);
        assert!(!report.passes());
        assert_eq!(report.degrees[0].s0, int(0));
        assert_eq!(report.degrees[0].violations, vec![Violation::S1ExceedsBound]);
    }

    #[test]
    fn integrality_mode_is_opt_in() {
        let t = BBettiTable::from_ints(3, &[(0, 0, 1), (2, 3, 5), (3, 4, 4)]).unwrap();
        assert!(validate_b_table(&t, false).passes());
        let strict = validate_b_table(&t, true);
        assert_eq!(strict.degrees[0].violations, vec![Violation::NotDivisible]);
    }

    #[test]
    fn orphan_column_three_entry_is_reported() {
        let t = BBettiTable::from_ints(2, &[(3, 7, 2), (1, 1, -1)]).unwrap();
        let report = validate_b_table(&t, false);
        assert_eq!(report.negative_entries, vec![Violation::NegativeEntry { col: 1, degree: 1 }]);
        assert_eq!(report.degrees[0].degree, 6);
        assert!(report.degrees[0].violations.contains(&Violation::NegativeS0));
    }

    #[test]
    fn every_small_pure_table_passes() {
        for d in 1..=6u32 {
            for d0 in 0..=8 {
                for d1 in d0 + 1..=8 {
                    for d2 in d1 + 1..=8 {
                        for ell in 0..d {
                            let p = PureTypeB::new(d, d0, d1, d2, ell).unwrap();
                            let report = validate_b_table(&pure_betti_b(&p), true);
                            assert!(report.passes(), "{p} over d={d}: {report:?}");
                        }
                    }
                }
            }
        }
    }
}
