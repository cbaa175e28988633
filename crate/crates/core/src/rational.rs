//! Exact rational scalars.
//!
//! [`Rational`] is `num_rational::BigRational`, which keeps every value
//! reduced with a positive denominator and stores zero as `0/1`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

pub type Rational = num_rational::BigRational;

/// Builds `num/den` from machine integers. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `base^exp` for any sign of `exp`. Panics on `0^negative`.
pub fn pow(base: &Rational, exp: i64) -> Rational {
    if exp == 0 {
        return Rational::one();
    }
    let mag = exp.unsigned_abs();
    let numer = num_traits::pow(base.numer().clone(), mag as usize);
    let denom = num_traits::pow(base.denom().clone(), mag as usize);
    if exp > 0 {
        Rational::new(numer, denom)
    } else {
        assert!(!numer.is_zero(), "zero raised to a negative power");
        Rational::new(denom, numer)
    }
}

/// `(-1)^exp`.
pub fn sign_power(exp: i64) -> Rational {
    if exp.rem_euclid(2) == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Canonical `"num/den"` text; the denominator is always written.
pub fn to_fraction_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `"a"` or `"a/b"` with optional sign on `a`. Returns `None` on
/// malformed text or a zero denominator.
pub fn parse_fraction(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Rational::new(n, d))
}

/// Least common multiple of all denominators.
pub fn common_denominator<'a, I: IntoIterator<Item = &'a Rational>>(items: I) -> BigInt {
    items
        .into_iter()
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

/// Greatest common divisor of all numerators (zero for an empty or all-zero input).
pub fn numerator_gcd<'a, I: IntoIterator<Item = &'a Rational>>(items: I) -> BigInt {
    items
        .into_iter()
        .fold(BigInt::zero(), |acc, r| acc.gcd(r.numer()))
}
