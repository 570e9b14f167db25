//! Arbitrary-precision rationals and their textual form.
//!
//! Values are always kept in lowest terms with a positive denominator (this
//! is maintained by [`num_rational::BigRational`]). On the wire a rational is
//! the string `"p/q"`, or `"p"` when the denominator is one.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Parses `p`, `p/q`, or a finite decimal such as `-0.25`.
pub fn parse(text: &str) -> Result<Rational> {
    let s = text.trim();
    let bad = || Error::Invalid(format!("not a rational number: {text:?}"));
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((p, q)) = s.split_once('/') {
        let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
        let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
        if q.is_zero() {
            return Err(Error::Invalid(format!("zero denominator in {text:?}")));
        }
        return Ok(Rational::new(p, q));
    }
    if let Some((whole, fraction)) = s.split_once('.') {
        if fraction.is_empty() || !fraction.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = whole.starts_with('-');
        let digits = format!("{}{}", whole.trim_start_matches(['-', '+']), fraction);
        let mut n = BigInt::from_str(&digits).map_err(|_| bad())?;
        if negative {
            n = -n;
        }
        let d = num_traits::pow(BigInt::from(10), fraction.len());
        return Ok(Rational::new(n, d));
    }
    BigInt::from_str(s).map(Rational::from_integer).map_err(|_| bad())
}

pub fn format(q: &Rational) -> String {
    q.to_string()
}

/// Sign of `q` as -1, 0 or 1.
pub fn signum(q: &Rational) -> i32 {
    if q.is_positive() {
        1
    } else if q.is_negative() {
        -1
    } else {
        0
    }
}

/// Serde adapters that write rationals as `"p/q"` strings.
pub mod serde_str {
    use serde::{de, Deserialize, Deserializer, Serializer};

    use super::Rational;

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&q.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        super::parse(&text).map_err(de::Error::custom)
    }

    pub mod vec {
        use serde::{de, ser::SerializeSeq, Deserialize, Deserializer, Serializer};

        use crate::rational::Rational;

        pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(v.len()))?;
            for q in v {
                seq.serialize_element(&q.to_string())?;
            }
            seq.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
            let items = Vec::<String>::deserialize(d)?;
            items
                .iter()
                .map(|t| crate::rational::parse(t).map_err(de::Error::custom))
                .collect()
        }
    }

    pub mod vec2 {
        use serde::{de, ser::SerializeSeq, Deserialize, Deserializer, Serializer};

        use crate::rational::Rational;

        pub fn serialize<S: Serializer>(v: &[Vec<Rational>], s: S) -> Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(v.len()))?;
            for row in v {
                let row: Vec<String> = row.iter().map(|q| q.to_string()).collect();
                seq.serialize_element(&row)?;
            }
            seq.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(
            d: D,
        ) -> Result<Vec<Vec<Rational>>, D::Error> {
            let rows = Vec::<Vec<String>>::deserialize(d)?;
            rows.iter()
                .map(|row| {
                    row.iter()
                        .map(|t| crate::rational::parse(t).map_err(de::Error::custom))
                        .collect()
                })
                .collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_all_forms() {
        assert_eq!(parse("3").unwrap(), int(3));
        assert_eq!(parse("-6/4").unwrap(), frac(-3, 2));
        assert_eq!(parse(" 0.25 ").unwrap(), frac(1, 4));
        assert_eq!(parse("-1.5").unwrap(), frac(-3, 2));
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
        assert!(parse("").is_err());
    }

    #[test]
    fn formats_in_lowest_terms() {
        assert_eq!(format(&frac(4, -6)), "-2/3");
        assert_eq!(format(&int(7)), "7");
    }
}
