use num_bigint::BigInt;
use num_rational::BigRational;

/// Arbitrary-precision rational number. `Ratio` keeps itself reduced with a
/// positive denominator, and renders as `p` or `p/q`.
pub type Rational = BigRational;

/// The integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// The fraction `n/d`, reduced. Panics when `d == 0`.
pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Signed};

    #[test]
    fn normalized_on_construction() {
        let r = frac(6, -4);
        assert_eq!(r, frac(-3, 2));
        assert!(r.denom().is_positive());
        assert_eq!(r.to_string(), "-3/2");
        assert_eq!(frac(4, 2).to_string(), "2");
        assert!(frac(7, 7).is_one());
    }

    #[test]
    fn parses_both_spellings() {
        assert_eq!("5/28".parse::<Rational>().unwrap(), frac(5, 28));
        assert_eq!("-9".parse::<Rational>().unwrap(), int(-9));
    }
}
