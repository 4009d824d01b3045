//! Exact rational scalars. Thin helpers over `num_rational::BigRational`,
//! which already keeps gcd(|num|, den) = 1 and den >= 1.

use num_bigint::BigInt;
use num_traits::One;

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratq(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// 2^e as an exact rational.
pub fn rat_pow2(e: u32) -> Rational {
    Rational::from_integer(BigInt::one() << e)
}

/// n! as an exact rational.
pub fn rat_factorial(n: u32) -> Rational {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    Rational::from_integer(acc)
}
