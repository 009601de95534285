//! The coefficient field: exact rationals of arbitrary precision.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Reduced fraction with positive denominator; zero is `0/1`.
pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// Gcd of the numerators (zero for an empty or all-zero list).
pub fn content_gcd<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::zero(), |acc, v| acc.gcd(v.numer()))
}

/// Scale `values` so they become coprime integers whose first nonzero entry
/// is positive. Returns the scale factor applied.
pub fn primitive_scale(values: &[Rational]) -> Rational {
    let den = common_denominator(values);
    let scaled: Vec<Rational> = values
        .iter()
        .map(|v| v * Rational::from_integer(den.clone()))
        .collect();
    let g = content_gcd(&scaled);
    if g.is_zero() {
        return Rational::one();
    }
    let mut factor = Rational::new(den, g);
    if values.iter().find(|v| !v.is_zero()).is_some_and(|v| v.is_negative()) {
        factor = -factor;
    }
    factor
}
