//! Exact arithmetic: rationals, dense polynomials and truncated EGFs.

mod egf;
mod poly;

pub use egf::EgfSeries;
pub use poly::Polynomial;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator. `Display` renders `"num/den"`, or just `"num"` for integers.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("series exponential needs a zero constant term, found {0}")]
    NonZeroConstantTerm(Rational),
    #[error("quotient is not a power series: numerator valuation {num} is below denominator valuation {den}")]
    NegativeValuation { num: usize, den: usize },
    #[error("division by a series that vanishes to its full order")]
    ZeroDivisor,
    #[error("cannot differentiate a series truncated at order 0")]
    OrderExhausted,
    #[error("invalid rational literal {0:?}")]
    Parse(String),
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n / d`, reduced. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn big(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Falling factorial `n (n-1) ... (n-k+1)`.
pub fn falling_factorial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    ((n - k + 1)..=n).fold(BigInt::one(), |acc, j| acc * j)
}

/// Binomial coefficient by the multiplicative formula. Used where no cache
/// handle is in scope; [`crate::special::binomial`] is the cached variant.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * (n - j) / (j + 1);
    }
    acc
}

/// Parses `"7"`, `"-1/2"`, `"10/4"` (reduced on the way in).
pub fn parse_rational(s: &str) -> Result<Rational, ExactError> {
    let s = s.trim();
    let parsed = match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| ExactError::Parse(s.into()))?;
            let d: BigInt = d.trim().parse().map_err(|_| ExactError::Parse(s.into()))?;
            if d.is_zero() {
                return Err(ExactError::Parse(s.into()));
            }
            Rational::new(n, d)
        }
        None => Rational::from_integer(s.parse().map_err(|_| ExactError::Parse(s.into()))?),
    };
    Ok(parsed)
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Exact rational value of a finite double.
pub fn from_f64(x: f64) -> Option<Rational> {
    Rational::from_float(x)
}

/// Serde adapter writing a [`Rational`] as its `"num/den"` string.
pub mod rational_string {
    use super::{parse_rational, Rational};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(r)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_format() {
        assert_eq!(ratio(5, 6).to_string(), "5/6");
        assert_eq!(ratio(1, -2).to_string(), "-1/2");
        assert_eq!(ratio(14, 2).to_string(), "7");
        assert_eq!(int(0).to_string(), "0");
    }

    #[test]
    fn lowest_terms() {
        let r = ratio(10, -4);
        assert_eq!(*r.numer(), BigInt::from(-5));
        assert_eq!(*r.denom(), BigInt::from(2));
        let z = ratio(0, -9);
        assert_eq!(*z.denom(), BigInt::from(1));
    }

    #[test]
    fn parse() {
        assert_eq!(parse_rational("8389/840").unwrap(), ratio(8389, 840));
        assert_eq!(parse_rational(" -3 ").unwrap(), int(-3));
        assert_eq!(parse_rational("6/4").unwrap(), ratio(3, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn factorials_and_binomials() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(6), BigInt::from(720));
        assert_eq!(falling_factorial(5, 2), BigInt::from(20));
        assert_eq!(falling_factorial(2, 3), BigInt::from(0));
        assert_eq!(binomial(10, 3), BigInt::from(120));
        assert_eq!(binomial(3, 5), BigInt::from(0));
    }

    #[test]
    fn float_round_trip() {
        assert_eq!(from_f64(0.5).unwrap(), ratio(1, 2));
        assert!((to_f64(&ratio(1, 3)) - 1.0 / 3.0).abs() < 1e-16);
    }
}
