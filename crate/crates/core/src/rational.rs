//! Exact rational scalars.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary precision rational; denominators are kept positive and reduced.
pub type Rational = BigRational;

/// `num / den` as an exact rational. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn half() -> Rational {
    rat(1, 2)
}

/// Parses `"p"`, `"p/q"` or `"-p/q"`; surrounding whitespace is ignored.
pub fn parse_rational(input: &str) -> Result<Rational> {
    let err = || Error::Parse {
        what: "rational",
        input: input.to_string(),
    };
    let s = input.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| err())?;
    let den: BigInt = den.parse().map_err(|_| err())?;
    if den.is_zero() {
        return Err(err());
    }
    Ok(Rational::new(num, den))
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Integer value of `r` if it has unit denominator and fits in an `i64`.
pub fn to_i64(r: &Rational) -> Option<i64> {
    if r.is_integer() {
        r.numer().to_i64()
    } else {
        None
    }
}

/// Serde adapter storing rationals as `"p/q"` strings.
pub mod serde_str {
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
    fn parses_integers_and_fractions() {
        assert_eq!(parse_rational("-5").unwrap(), int(-5));
        assert_eq!(parse_rational(" 1/2 ").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("6/-4").unwrap(), rat(-3, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("0.5").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn display_round_trips() {
        for r in [rat(-35, 4), int(0), int(7), rat(2, 6)] {
            assert_eq!(parse_rational(&r.to_string()).unwrap(), r);
        }
        assert_eq!(rat(-35, 4).to_string(), "-35/4");
    }
}
