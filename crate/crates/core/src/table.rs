//! Finitely supported Betti tables over `S = k[x,y]` and over `B`.
//!
//! Both table types store nonzero entries only; reading an absent cell gives
//! zero. A `B`-table stores columns 0 through 3. Every later column of a
//! `B`-resolution of a finite-length module is forced by the rule
//! `β_{i,j} = (d-1)·β_{i-1,j-1}` for `i >= 4`, so it is computed on demand by
//! [`tail_expand`] and never stored.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{BettiError, Result};
use crate::rational::{int, Rational};

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
struct Grid<const COLS: usize> {
    entries: BTreeMap<(usize, i64), Rational>,
}

impl<const COLS: usize> Grid<COLS> {
    fn check_col(i: usize) -> Result<()> {
        if i >= COLS {
            return Err(BettiError::ColumnOutOfRange { col: i, max: COLS - 1 });
        }
        Ok(())
    }

    fn get(&self, i: usize, j: i64) -> Rational {
        self.entries.get(&(i, j)).cloned().unwrap_or_else(Rational::zero)
    }

    fn set(&mut self, i: usize, j: i64, value: Rational) -> Result<()> {
        Self::check_col(i)?;
        if value.is_zero() {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), value);
        }
        Ok(())
    }

    fn add_to(&mut self, i: usize, j: i64, value: &Rational) -> Result<()> {
        Self::check_col(i)?;
        if value.is_zero() {
            return Ok(());
        }
        let cell = self.entries.entry((i, j)).or_insert_with(Rational::zero);
        *cell += value;
        if cell.is_zero() {
            self.entries.remove(&(i, j));
        }
        Ok(())
    }

    fn axpy(&mut self, c: &Rational, other: &Self) {
        if c.is_zero() {
            return;
        }
        for (&(i, j), v) in &other.entries {
            // Columns already validated in `other`.
            let _ = self.add_to(i, j, &(c * v));
        }
    }

    fn scaled(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::default();
        }
        Self {
            entries: self.entries.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    fn column(&self, i: usize) -> impl Iterator<Item = (i64, &Rational)> + '_ {
        self.entries
            .range((i, i64::MIN)..=(i, i64::MAX))
            .map(|(&(_, j), v)| (j, v))
    }

    fn min_degree(&self, i: usize) -> Option<i64> {
        self.column(i).next().map(|(j, _)| j)
    }

    fn total(&self, i: usize) -> Rational {
        self.column(i).map(|(_, v)| v).sum()
    }
}

/// Betti table over `S = k[x,y]`: homological columns 0, 1, 2.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct SBettiTable {
    grid: Grid<3>,
}

impl SBettiTable {
    pub const COLUMNS: usize = 3;

    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a table by summing the given cells. Fails on a column outside 0..=2.
    pub fn from_entries<I>(cells: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, i64, Rational)>,
    {
        let mut t = Self::new();
        for (i, j, v) in cells {
            t.add_to(i, j, &v)?;
        }
        Ok(t)
    }

    /// Integer-valued convenience constructor.
    pub fn from_ints(cells: &[(usize, i64, i64)]) -> Result<Self> {
        Self::from_entries(cells.iter().map(|&(i, j, v)| (i, j, int(v))))
    }

    pub fn get(&self, i: usize, j: i64) -> Rational {
        self.grid.get(i, j)
    }

    pub fn set(&mut self, i: usize, j: i64, value: Rational) -> Result<()> {
        self.grid.set(i, j, value)
    }

    pub fn add_to(&mut self, i: usize, j: i64, value: &Rational) -> Result<()> {
        self.grid.add_to(i, j, value)
    }

    /// Nonzero cells in `(column, degree)` order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, i64, &Rational)> + '_ {
        self.grid.entries.iter().map(|(&(i, j), v)| (i, j, v))
    }

    pub fn column(&self, i: usize) -> impl Iterator<Item = (i64, &Rational)> + '_ {
        self.grid.column(i)
    }

    pub fn min_degree(&self, i: usize) -> Option<i64> {
        self.grid.min_degree(i)
    }

    pub fn total(&self, i: usize) -> Rational {
        self.grid.total(i)
    }

    pub fn len(&self) -> usize {
        self.grid.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.grid.entries.is_empty()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.grid.entries.values().all(|v| !v.is_negative())
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        Self { grid: self.grid.scaled(c) }
    }

    /// `self += c * other`
    pub fn axpy(&mut self, c: &Rational, other: &Self) {
        self.grid.axpy(c, &other.grid);
    }
}

/// Betti table over `B`, the `d`-th Veronese subring of `k[x,y]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BBettiTable {
    d: u32,
    grid: Grid<4>,
}

impl BBettiTable {
    /// Number of stored columns. Later columns follow from column 3.
    pub const COLUMNS: usize = 4;

    /// The zero table over the ring with parameter `d`. Fails when `d == 0`.
    pub fn new(d: u32) -> Result<Self> {
        if d == 0 {
            return Err(BettiError::DegreeTooSmall { d, min: 1 });
        }
        Ok(Self { d, grid: Grid::default() })
    }

    pub fn from_entries<I>(d: u32, cells: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, i64, Rational)>,
    {
        let mut t = Self::new(d)?;
        for (i, j, v) in cells {
            t.add_to(i, j, &v)?;
        }
        Ok(t)
    }

    pub fn from_ints(d: u32, cells: &[(usize, i64, i64)]) -> Result<Self> {
        Self::from_entries(d, cells.iter().map(|&(i, j, v)| (i, j, int(v))))
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn get(&self, i: usize, j: i64) -> Rational {
        self.grid.get(i, j)
    }

    pub fn set(&mut self, i: usize, j: i64, value: Rational) -> Result<()> {
        self.grid.set(i, j, value)
    }

    pub fn add_to(&mut self, i: usize, j: i64, value: &Rational) -> Result<()> {
        self.grid.add_to(i, j, value)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, i64, &Rational)> + '_ {
        self.grid.entries.iter().map(|(&(i, j), v)| (i, j, v))
    }

    pub fn column(&self, i: usize) -> impl Iterator<Item = (i64, &Rational)> + '_ {
        self.grid.column(i)
    }

    pub fn min_degree(&self, i: usize) -> Option<i64> {
        self.grid.min_degree(i)
    }

    pub fn total(&self, i: usize) -> Rational {
        self.grid.total(i)
    }

    pub fn len(&self) -> usize {
        self.grid.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.grid.entries.is_empty()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.grid.entries.values().all(|v| !v.is_negative())
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        Self { d: self.d, grid: self.grid.scaled(c) }
    }

    /// `self += c * other`; both tables must live over the same ring.
    pub fn axpy(&mut self, c: &Rational, other: &Self) -> Result<()> {
        self.same_ring(other)?;
        self.grid.axpy(c, &other.grid);
        Ok(())
    }

    pub(crate) fn same_ring(&self, other: &Self) -> Result<()> {
        if self.d != other.d {
            return Err(BettiError::MismatchedDegree { left: self.d, right: other.d });
        }
        Ok(())
    }

    /// Entry in any homological column, including the implied tail.
    pub fn get_extended(&self, i: usize, j: i64) -> Rational {
        if i < Self::COLUMNS {
            return self.get(i, j);
        }
        let steps = (i - 3) as u32;
        let factor = int(i64::from(self.d) - 1).pow(steps as i32);
        self.get(3, j - i64::from(steps)) * factor
    }
}

/// Cells of columns `4..=max_col` implied by column 3 of `t`, in column order.
///
/// Each column-3 entry at degree `j` continues along its row:
/// `β_{i, j+(i-3)} = (d-1)^{i-3} β_{3,j}`. Empty when `d == 1` or column 3 is empty.
pub fn tail_expand(t: &BBettiTable, max_col: usize) -> Vec<(usize, i64, Rational)> {
    let factor = int(i64::from(t.d()) - 1);
    if factor.is_zero() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut current: Vec<(i64, Rational)> = t.column(3).map(|(j, v)| (j, v.clone())).collect();
    for i in 4..=max_col {
        current = current
            .into_iter()
            .map(|(j, v)| (j + 1, v * &factor))
            .collect();
        out.extend(current.iter().map(|(j, v)| (i, *j, v.clone())));
    }
    out
}

impl fmt::Display for SBettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (n, (i, j, v)) in self.entries().enumerate() {
            if n > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({i},{j}):{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for BBettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d={} {{", self.d)?;
        for (n, (i, j, v)) in self.entries().enumerate() {
            if n > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({i},{j}):{v}")?;
        }
        write!(f, "}}")
    }
}
