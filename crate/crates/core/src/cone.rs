//! The class map from `B`-tables to `S`-tables and greedy decomposition of
//! tables into chains of pure diagrams.
//!
//! A finite-length `B`-module `M` gives an `S`-module `M'` whose columns 0 and
//! 1 are those of `M` with degrees scaled by `d`, and whose column 2 in the
//! degree block `jd-(d-1) ..= jd` records the multiplicities `b_{ℓ,j}` of
//! `M^(ℓ)(-j)` in the second syzygy of `M`. The `B`-table only sees two sums
//! per block, so the image is an equivalence class ([`PhiClass`]) rather than
//! a single `S`-table.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{BettiError, PartialDecomposition, Result};
use crate::pure::{pure_betti_b, pure_betti_s, pure_leq, PureTypeB, PureTypeS};
use crate::rational::{int, Rational};
use crate::table::{BBettiTable, SBettiTable};

/// Equivalence class of `S`-tables: columns 0 and 1 exactly, and for each
/// `B`-degree `j` the sums `s0_j = Σ_ℓ γ_{2,jd-ℓ}` and `s1_j = Σ_ℓ ℓ·γ_{2,jd-ℓ}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiClass {
    d: u32,
    cols01: BTreeMap<(usize, i64), Rational>,
    class_data: BTreeMap<i64, (Rational, Rational)>,
}

impl PhiClass {
    fn empty(d: u32) -> Self {
        Self { d, cols01: BTreeMap::new(), class_data: BTreeMap::new() }
    }

    /// Builds a class from raw data, dropping zero cells.
    pub fn new<A, C>(d: u32, cols01: A, class_data: C) -> Result<Self>
    where
        A: IntoIterator<Item = ((usize, i64), Rational)>,
        C: IntoIterator<Item = (i64, (Rational, Rational))>,
    {
        if d == 0 {
            return Err(BettiError::DegreeTooSmall { d, min: 1 });
        }
        let mut c = Self::empty(d);
        for ((i, j), v) in cols01 {
            if i > 1 {
                return Err(BettiError::ColumnOutOfRange { col: i, max: 1 });
            }
            c.add_cell(i, j, &v);
        }
        for (j, (s0, s1)) in class_data {
            c.add_block(j, &s0, &s1);
        }
        Ok(c)
    }

    /// The class of an actual `S`-table.
    pub fn of_s_table(s: &SBettiTable, d: u32) -> Result<Self> {
        if d == 0 {
            return Err(BettiError::DegreeTooSmall { d, min: 1 });
        }
        let mut c = Self::empty(d);
        for (i, j, v) in s.entries().filter(|(i, _, _)| *i <= 1) {
            c.add_cell(i, j, v);
        }
        let dd = i64::from(d);
        for (k, v) in s.column(2) {
            let block = k.div_euclid(dd) + i64::from(k.rem_euclid(dd) != 0);
            let ell = block * dd - k;
            c.add_block(block, v, &(v * int(ell)));
        }
        Ok(c)
    }

    fn add_cell(&mut self, i: usize, j: i64, v: &Rational) {
        if v.is_zero() {
            return;
        }
        let slot = self.cols01.entry((i, j)).or_insert_with(Rational::zero);
        *slot += v;
        if slot.is_zero() {
            self.cols01.remove(&(i, j));
        }
    }

    fn add_block(&mut self, j: i64, s0: &Rational, s1: &Rational) {
        let slot = self
            .class_data
            .entry(j)
            .or_insert_with(|| (Rational::zero(), Rational::zero()));
        slot.0 += s0;
        slot.1 += s1;
        if slot.0.is_zero() && slot.1.is_zero() {
            self.class_data.remove(&j);
        }
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    /// Columns 0 and 1 keyed by `(column, S-degree)`.
    pub fn cols01(&self) -> &BTreeMap<(usize, i64), Rational> {
        &self.cols01
    }

    /// `(s0_j, s1_j)` keyed by `B`-degree `j`.
    pub fn class_data(&self) -> &BTreeMap<i64, (Rational, Rational)> {
        &self.class_data
    }

    pub fn is_zero(&self) -> bool {
        self.cols01.is_empty() && self.class_data.is_empty()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.d != other.d {
            return Err(BettiError::MismatchedDegree { left: self.d, right: other.d });
        }
        let mut out = self.clone();
        for (&(i, j), v) in &other.cols01 {
            out.add_cell(i, j, v);
        }
        for (&j, (s0, s1)) in &other.class_data {
            out.add_block(j, s0, s1);
        }
        Ok(out)
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::empty(self.d);
        }
        Self {
            d: self.d,
            cols01: self.cols01.iter().map(|(k, v)| (*k, v * c)).collect(),
            class_data: self
                .class_data
                .iter()
                .map(|(j, (a, b))| (*j, (a * c, b * c)))
                .collect(),
        }
    }
}

/// The class of `S`-tables attached to the `B`-table `t`.
pub fn phi(t: &BBettiTable) -> PhiClass {
    let d = i64::from(t.d());
    let mut c = PhiClass::empty(t.d());
    for (i, j, v) in t.entries().filter(|(i, _, _)| *i <= 1) {
        c.add_cell(i, j * d, v);
    }
    let blocks = t.column(2).map(|(j, _)| j).chain(t.column(3).map(|(j, _)| j - 1));
    for j in blocks.collect::<std::collections::BTreeSet<_>>() {
        let s1 = t.get(3, j + 1) / int(d);
        let s0 = t.get(2, j) - &s1;
        c.add_block(j, &s0, &s1);
    }
    c
}

/// The member of `c` whose column-2 mass sits only at `ℓ = 0` and `ℓ = d-1`:
/// `γ_{2,jd-(d-1)} = s1/(d-1)` and `γ_{2,jd} = s0 - s1/(d-1)`.
pub fn phi_representative(c: &PhiClass) -> Result<SBettiTable> {
    let d = i64::from(c.d);
    let mut s = SBettiTable::new();
    for (&(i, j), v) in &c.cols01 {
        s.add_to(i, j, v)?;
    }
    for (&j, (s0, s1)) in &c.class_data {
        let infeasible = |reason: &str| BettiError::InfeasibleClass { degree: j, reason: reason.into() };
        if s0.is_negative() {
            return Err(infeasible("s0 < 0"));
        }
        if s1.is_negative() {
            return Err(infeasible("s1 < 0"));
        }
        if d == 1 {
            if !s1.is_zero() {
                return Err(infeasible("s1 must vanish when d = 1"));
            }
            s.add_to(2, j, s0)?;
            continue;
        }
        let top = s1 / int(d - 1);
        if &top > s0 {
            return Err(infeasible("s1 > (d-1)·s0"));
        }
        s.add_to(2, j * d - (d - 1), &top)?;
        s.add_to(2, j * d, &(s0 - &top))?;
    }
    Ok(s)
}

/// A positive combination of pure `B`-diagrams along a chain, plus whatever
/// could not be absorbed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub d: u32,
    pub terms: Vec<(Rational, PureTypeB)>,
    pub remainder: BBettiTable,
}

impl Decomposition {
    pub fn is_complete(&self) -> bool {
        self.remainder.is_empty()
    }

    /// Whether the types increase strictly in the partial order.
    pub fn is_chain(&self) -> bool {
        self.terms.windows(2).all(|w| {
            w[0].1 != w[1].1 && pure_leq(&w[0].1, &w[1].1).unwrap_or(false)
        })
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, (c, p)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*{p}")?;
        }
        if self.terms.is_empty() {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// The `S`-side analogue of [`Decomposition`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SDecomposition {
    pub terms: Vec<(Rational, PureTypeS)>,
    pub remainder: SBettiTable,
}

/// One subtraction of the greedy algorithm and the table it leaves behind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreedyStep {
    pub coefficient: Rational,
    pub pure_type: PureTypeB,
    pub remainder: BBettiTable,
}

/// Sum of the weighted pure tables of `dec` plus its remainder.
pub fn reconstruct(dec: &Decomposition) -> BBettiTable {
    let mut out = dec.remainder.clone();
    for (c, p) in &dec.terms {
        out.axpy(c, &pure_betti_b(p)).expect("terms live over dec.d");
    }
    out
}

/// Largest `c >= 0` with `rem - c·pure >= 0` on the support of `pure`.
fn max_multiple<'a, I>(cells: I) -> Rational
where
    I: IntoIterator<Item = (Rational, &'a Rational)>,
{
    cells
        .into_iter()
        .map(|(have, unit)| have / unit)
        .min()
        .map(|c| if c.is_negative() { Rational::zero() } else { c })
        .unwrap_or_else(Rational::zero)
}

fn corners(cols: usize, min_degree: impl Fn(usize) -> Option<i64>) -> std::result::Result<Vec<i64>, String> {
    let mut out = Vec::with_capacity(cols);
    for i in 0..cols {
        match min_degree(i) {
            Some(j) => out.push(j),
            None => return Err(format!("column {i} is exhausted while the table is nonzero")),
        }
    }
    if out.windows(2).any(|w| w[0] >= w[1]) {
        return Err(format!("corner degrees {out:?} do not increase strictly"));
    }
    Ok(out)
}

/// Decomposes `t` along a chain of extremal pure diagrams, also returning the
/// table left after each subtraction.
///
/// At each step the corners `(d0, d1, d2)` are the least degrees occupied in
/// columns 0, 1, 2; the candidates are `(d0,d1,d2;d-1)` and then
/// `(d0,d1,d2;0)`, and the first one admitting a positive multiple is
/// subtracted as far as the table stays nonnegative.
pub fn greedy_trace_b(t: &BBettiTable) -> Result<(Decomposition, Vec<GreedyStep>)> {
    let d = t.d();
    let mut dec = Decomposition { d, terms: Vec::new(), remainder: t.clone() };
    let mut steps = Vec::new();
    let stuck = |reason: String, dec: &Decomposition| BettiError::NotInCone {
        reason,
        partial: Box::new(PartialDecomposition::B(dec.clone())),
    };

    if let Some((i, j, _)) = t.entries().find(|(_, _, v)| v.is_negative()) {
        return Err(stuck(format!("entry ({i},{j}) is negative"), &dec));
    }

    let candidates: Vec<u32> = if d >= 2 { vec![d - 1, 0] } else { vec![0] };
    while !dec.remainder.is_empty() {
        let rem = &dec.remainder;
        let [d0, d1, d2] = match corners(3, |i| rem.min_degree(i)) {
            Ok(c) => [c[0], c[1], c[2]],
            Err(reason) => return Err(stuck(reason, &dec)),
        };

        let mut chosen = None;
        for &ell in &candidates {
            let p = PureTypeB::new(d, d0, d1, d2, ell)?;
            let unit = pure_betti_b(&p);
            let c = max_multiple(unit.entries().map(|(i, j, u)| (rem.get(i, j), u)));
            if c.is_positive() {
                chosen = Some((c, p, unit));
                break;
            }
        }
        let Some((c, p, unit)) = chosen else {
            return Err(stuck(
                format!("no pure diagram with corners ({d0},{d1},{d2}) fits"),
                &dec,
            ));
        };
        if let Some((_, last)) = dec.terms.last() {
            if *last == p || !pure_leq(last, &p)? {
                return Err(stuck(format!("{p} does not extend the chain after {last}"), &dec));
            }
        }
        dec.remainder.axpy(&-c.clone(), &unit)?;
        dec.terms.push((c.clone(), p));
        steps.push(GreedyStep { coefficient: c, pure_type: p, remainder: dec.remainder.clone() });
    }
    Ok((dec, steps))
}

/// Greedy decomposition of a `B`-table into a chain of pure diagrams with
/// `ℓ ∈ {0, d-1}`. Fails with [`BettiError::NotInCone`] carrying the partial
/// result when the table leaves the cone.
pub fn greedy_decompose_b(t: &BBettiTable) -> Result<Decomposition> {
    greedy_trace_b(t).map(|(dec, _)| dec)
}

/// Greedy decomposition of a codimension-two `S`-table into a chain of pure
/// diagrams in their primitive integer normalization.
pub fn greedy_decompose_s(t: &SBettiTable) -> Result<SDecomposition> {
    let mut dec = SDecomposition { terms: Vec::new(), remainder: t.clone() };
    let stuck = |reason: String, dec: &SDecomposition| BettiError::NotInCone {
        reason,
        partial: Box::new(PartialDecomposition::S(dec.clone())),
    };
    if let Some((i, j, _)) = t.entries().find(|(_, _, v)| v.is_negative()) {
        return Err(stuck(format!("entry ({i},{j}) is negative"), &dec));
    }
    while !dec.remainder.is_empty() {
        let rem = &dec.remainder;
        let c = match corners(3, |i| rem.min_degree(i)) {
            Ok(c) => c,
            Err(reason) => return Err(stuck(reason, &dec)),
        };
        let p = PureTypeS::new(c[0], c[1], c[2])?;
        let unit = pure_betti_s(&p);
        let coeff = max_multiple(unit.entries().map(|(i, j, u)| (rem.get(i, j), u)));
        if !coeff.is_positive() {
            return Err(stuck(format!("pure diagram {p} does not fit"), &dec));
        }
        if let Some((_, last)) = dec.terms.last() {
            if *last == p || !last.leq(&p) {
                return Err(stuck(format!("{p} does not extend the chain after {last}"), &dec));
            }
        }
        dec.remainder.axpy(&-coeff.clone(), &unit);
        dec.terms.push((coeff, p));
    }
    Ok(dec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn pb(d: u32, d0: i64, d1: i64, d2: i64, ell: u32) -> PureTypeB {
        PureTypeB::new(d, d0, d1, d2, ell).unwrap()
    }

    fn worked_table() -> BBettiTable {
        BBettiTable::from_ints(3, &[(0, 0, 1), (1, 1, 1), (1, 2, 2), (2, 3, 5), (3, 4, 9)]).unwrap()
    }

    #[test]
    fn phi_of_quintic_top_type() {
        let c = phi(&pure_betti_b(&pb(5, 0, 1, 2, 4)));
        assert_eq!(c.class_data()[&2], (int(5), int(20)));
        assert_eq!(c.cols01()[&(0, 0)], int(1));
        assert_eq!(c.cols01()[&(1, 5)], int(6));
    }

    #[test]
    fn phi_of_zero_is_zero() {
        assert!(phi(&BBettiTable::new(3).unwrap()).is_zero());
    }

    #[test]
    fn representative_of_worked_class() {
        let c = phi(&worked_table());
        assert_eq!(c.class_data()[&3], (int(2), int(3)));
        let s = phi_representative(&c).unwrap();
        assert_eq!(s.get(2, 7), frac(3, 2));
        assert_eq!(s.get(2, 9), frac(1, 2));
        assert_eq!(PhiClass::of_s_table(&s, 3).unwrap(), c);
    }

    #[test]
    fn representative_extremes() {
        let low = PhiClass::new(4, [], [(2, (int(3), int(0)))]).unwrap();
        let s = phi_representative(&low).unwrap();
        assert_eq!(s, SBettiTable::from_ints(&[(2, 8, 3)]).unwrap());
        let high = PhiClass::new(4, [], [(2, (int(3), int(9)))]).unwrap();
        let s = phi_representative(&high).unwrap();
        assert_eq!(s, SBettiTable::from_ints(&[(2, 5, 3)]).unwrap());
    }

    #[test]
    fn representative_rejects_infeasible_classes() {
        let bad = PhiClass::new(3, [], [(1, (int(1), int(3)))]).unwrap();
        assert!(matches!(phi_representative(&bad), Err(BettiError::InfeasibleClass { degree: 1, .. })));
        let neg = PhiClass::new(3, [], [(1, (int(-1), int(0)))]).unwrap();
        assert!(phi_representative(&neg).is_err());
        let flat = PhiClass::new(1, [], [(1, (int(1), int(1)))]).unwrap();
        assert!(phi_representative(&flat).is_err());
    }

    #[test]
    fn worked_greedy_chain() {
        let (dec, steps) = greedy_trace_b(&worked_table()).unwrap();
        assert_eq!(
            dec.terms,
            vec![
                (frac(1, 7), pb(3, 0, 1, 3, 2)),
                (frac(5, 28), pb(3, 0, 2, 3, 2)),
                (frac(1, 12), pb(3, 0, 2, 3, 0)),
            ]
        );
        assert!(dec.is_complete());
        assert!(dec.is_chain());
        let first = &steps[0].remainder;
        let want = BBettiTable::from_ints(3, &[(0, 0, 3), (1, 2, 14), (2, 3, 26), (3, 4, 45)])
            .unwrap()
            .scaled(&frac(1, 7));
        assert_eq!(*first, want);
        assert_eq!(reconstruct(&dec), worked_table());
    }

    #[test]
    fn pure_table_decomposes_to_itself() {
        for p in [pb(3, 0, 1, 3, 2), pb(3, 1, 4, 6, 0), pb(1, 0, 1, 2, 0), pb(5, -2, 0, 3, 4)] {
            let dec = greedy_decompose_b(&pure_betti_b(&p)).unwrap();
            assert_eq!(dec.terms, vec![(int(1), p)]);
        }
    }

    #[test]
    fn intermediate_ell_splits_by_redundancy() {
        let dec = greedy_decompose_b(&pure_betti_b(&pb(3, 0, 2, 3, 1))).unwrap();
        assert_eq!(
            dec.terms,
            vec![(frac(1, 2), pb(3, 0, 2, 3, 2)), (frac(1, 2), pb(3, 0, 2, 3, 0))]
        );
    }

    #[test]
    fn not_in_cone_reports_progress() {
        // Column 1 in degree 0 sits below the column-0 corner.
        let bad = BBettiTable::from_ints(3, &[(0, 0, 1), (1, 0, 1), (2, 3, 1)]).unwrap();
        match greedy_decompose_b(&bad) {
            Err(BettiError::NotInCone { partial, .. }) => match *partial {
                PartialDecomposition::B(dec) => {
                    assert!(dec.terms.is_empty());
                    assert_eq!(dec.remainder, bad);
                }
                other => panic!("unexpected partial {other:?}"),
            },
            other => panic!("expected NotInCone, got {other:?}"),
        }

        // Fits once, then the leftover has an empty column.
        let mut t = pure_betti_b(&pb(3, 0, 2, 3, 0));
        t.add_to(0, 0, &int(5)).unwrap();
        match greedy_decompose_b(&t) {
            Err(BettiError::NotInCone { partial, .. }) => match *partial {
                PartialDecomposition::B(dec) => {
                    assert_eq!(dec.terms, vec![(int(1), pb(3, 0, 2, 3, 0))]);
                    assert_eq!(dec.remainder, BBettiTable::from_ints(3, &[(0, 0, 5)]).unwrap());
                    assert_eq!(reconstruct(&dec), t);
                }
                other => panic!("unexpected partial {other:?}"),
            },
            other => panic!("expected NotInCone, got {other:?}"),
        }

        let neg = BBettiTable::from_ints(3, &[(0, 0, -1)]).unwrap();
        assert!(greedy_decompose_b(&neg).is_err());
    }

    #[test]
    fn worked_s_side() {
        let s = SBettiTable::from_ints(&[(0, 0, 1), (1, 3, 1), (1, 6, 2), (2, 7, 1), (2, 8, 1)]).unwrap();
        let dec = greedy_decompose_s(&s).unwrap();
        let want = vec![
            (frac(1, 7), PureTypeS::new(0, 3, 7).unwrap()),
            (frac(2, 21), PureTypeS::new(0, 6, 7).unwrap()),
            (frac(1, 3), PureTypeS::new(0, 6, 8).unwrap()),
        ];
        assert_eq!(dec.terms, want);
        assert!(dec.remainder.is_empty());
    }

    #[test]
    fn koszul_s_decomposition() {
        let p = PureTypeS::new(0, 1, 2).unwrap();
        let dec = greedy_decompose_s(&pure_betti_s(&p)).unwrap();
        assert_eq!(dec.terms, vec![(int(1), p)]);
    }

    #[test]
    fn empty_decomposition_reconstructs_zero() {
        let dec = Decomposition { d: 2, terms: vec![], remainder: BBettiTable::new(2).unwrap() };
        assert!(reconstruct(&dec).is_empty());
        assert!(greedy_decompose_b(&BBettiTable::new(2).unwrap()).unwrap().terms.is_empty());
    }
}
