use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rncbetti_core::Rational;

pub(crate) type SparseVec = BTreeMap<usize, Rational>;

/// Incrementally built row-echelon basis over the rationals. Each stored row
/// is normalized so its leading (smallest) column holds a one.
#[derive(Debug, Default)]
pub(crate) struct Echelon {
    rows: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    #[cfg(test)]
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, mut v: SparseVec) -> SparseVec {
        let mut cursor = 0usize;
        loop {
            let next = v.range(cursor..).map(|(c, x)| (*c, x.clone())).find(|(c, _)| self.rows.contains_key(c));
            let Some((col, factor)) = next else { return v };
            for (c, x) in &self.rows[&col] {
                let slot = v.entry(*c).or_insert_with(Rational::zero);
                *slot -= &factor * x;
                if slot.is_zero() {
                    v.remove(c);
                }
            }
            cursor = col + 1;
        }
    }

    /// Adds `v` to the span; returns whether it was independent.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let v = self.reduce(v);
        let Some((&lead, x)) = v.iter().next() else { return false };
        let inv = Rational::one() / x;
        let row = v.into_iter().map(|(c, y)| (c, y * &inv)).collect();
        self.rows.insert(lead, row);
        true
    }
}
