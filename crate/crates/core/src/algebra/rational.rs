//! Helpers around the exact rational scalar.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::error::AlgebraError;

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn from_big(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

/// Canonical `p/q` text, `p` alone when the denominator is one.
pub fn to_canonical(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational, AlgebraError> {
    let bad = || AlgebraError::Parse(s.to_string());
    let s = s.trim();
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let p: BigInt = p.parse().map_err(|_| bad())?;
    let q: BigInt = q.parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(p, q))
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

pub fn central_binomial(mu: u32) -> Rational {
    Rational::from_integer(BigInt::from(binomial(2 * mu as u64, mu as u64)))
}

/// `base^exp` for any integer exponent; panics on `0^negative`.
pub fn pow_i(base: &Rational, exp: i64) -> Rational {
    let mut acc = Rational::one();
    let b = if exp < 0 { base.recip() } else { base.clone() };
    for _ in 0..exp.unsigned_abs() {
        acc *= &b;
    }
    acc
}

pub fn is_nonnegative(r: &Rational) -> bool {
    !r.is_negative()
}

/// (2k+1)!! = 1·3·5·…·(2k+1).
pub fn double_factorial_odd(k: u32) -> BigUint {
    (0..=k as u64).fold(BigUint::one(), |acc, i| acc * (2 * i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_text_round_trips() {
        for r in [ratio(3, 6), rat(-4), ratio(-1, 12), rat(0)] {
            let s = to_canonical(&r);
            assert_eq!(parse_rational(&s).unwrap(), r);
        }
        assert_eq!(to_canonical(&ratio(2, 4)), "1/2");
        assert_eq!(to_canonical(&rat(7)), "7");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn small_combinatorics() {
        assert_eq!(binomial(6, 3), BigUint::from(20u32));
        assert_eq!(factorial(5), BigUint::from(120u32));
        assert_eq!(double_factorial_odd(2), BigUint::from(15u32));
        assert_eq!(pow_i(&ratio(-1, 2), -3), rat(-8));
    }
}
