use rand::{Rng, RngCore, SeedableRng};
use rncbetti_core::int;

use crate::groebner::GradedIdeal;
use crate::poly::{Monomial, Poly2};

/// Seeded SplitMix64 stream (Steele, Lea and Flood): a 64-bit counter
/// passed through a fixed mixing function.
#[derive(Debug, Clone)]
pub struct SplitMix64(rand_xoshiro::SplitMix64);

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self(rand_xoshiro::SplitMix64::seed_from_u64(seed))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform integer in `lo..=hi`.
    pub fn range_i64(&mut self, lo: i64, hi: i64) -> i64 {
        self.0.gen_range(lo..=hi)
    }
}

/// `count` homogeneous forms of the given degree whose coefficients are
/// drawn uniformly from `-10..=10`, monomial by monomial from `x^degree` down
/// to `y^degree`. A form that comes out zero is redrawn.
pub fn random_forms(degree: u32, count: usize, seed: u64) -> GradedIdeal {
    let mut rng = SplitMix64::new(seed);
    let mut forms = Vec::with_capacity(count);
    while forms.len() < count {
        let form = Poly2::from_terms((0..=degree).map(|k| {
            (Monomial::new(degree - k, k), int(rng.range_i64(-10, 10)))
        }));
        if !form.is_zero() {
            forms.push(form);
        }
    }
    GradedIdeal::new(forms).expect("forms are homogeneous")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splitmix_reference_values() {
        // First outputs for seed 0 of the reference implementation.
        let mut rng = SplitMix64::new(0);
        assert_eq!(rng.next_u64(), 0xE220_A839_7B1D_CDAF);
        assert_eq!(rng.next_u64(), 0x6E78_9E6A_A1B9_65F4);
    }

    #[test]
    fn forms_have_requested_shape() {
        let sextics = random_forms(6, 4, 7);
        assert_eq!(sextics.generators().len(), 4);
        assert!(sextics.generators().iter().all(|g| g.is_homogeneous() && g.degree() == Some(6)));
        let linear = random_forms(1, 2, 7);
        assert_eq!(linear.degrees(), vec![1, 1]);
    }

    #[test]
    fn deterministic() {
        assert_eq!(random_forms(6, 4, 2013), random_forms(6, 4, 2013));
        assert_ne!(random_forms(6, 4, 2013), random_forms(6, 4, 2014));
    }

    #[test]
    fn coefficients_in_range() {
        let mut rng = SplitMix64::new(99);
        let draws: Vec<i64> = (0..2000).map(|_| rng.range_i64(-10, 10)).collect();
        assert!(draws.iter().all(|v| (-10..=10).contains(v)));
        assert!(draws.contains(&-10) && draws.contains(&10));
    }
}
