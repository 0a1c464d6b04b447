//! Exact rational helpers: construction, parsing and fixed-point rendering.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar used for every metric value in the crate.
pub type Q = BigRational;

pub fn q(numer: i64, denom: i64) -> Q {
    Q::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Parses `p/q`, an integer, or a plain decimal such as `-0.125` exactly.
pub fn parse_rational(text: &str) -> Option<Q> {
    let text = text.trim();
    if text.is_empty() {
        return None;
    }
    if let Some((p, d)) = text.split_once('/') {
        let p: BigInt = p.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(Q::new(p, d));
    }
    let (negative, body) = match text.as_bytes()[0] {
        b'-' => (true, &text[1..]),
        b'+' => (false, &text[1..]),
        _ => (false, text),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    let all_digits = |s: &str| s.bytes().all(|b| b.is_ascii_digit());
    if !all_digits(int_part) || !all_digits(frac_part) {
        return None;
    }
    let digits = format!("{int_part}{frac_part}");
    let numer: BigInt = if digits.is_empty() { BigInt::zero() } else { digits.parse().ok()? };
    let denom = num_traits::pow(BigInt::from(10u32), frac_part.len());
    let value = Q::new(numer, denom);
    Some(if negative { -value } else { value })
}

/// Exact `p/q` form (integers print without a denominator).
pub fn format_exact(value: &Q) -> String {
    value.to_string()
}

/// Renders `value` with exactly `decimals` fractional digits, rounding
/// half-to-even on the exact value.
pub fn render_decimal(value: &Q, decimals: usize) -> String {
    let scale = num_traits::pow(BigInt::from(10u32), decimals);
    let scaled = value.abs() * Q::from_integer(scale);
    let floor = scaled.floor();
    let remainder = &scaled - &floor;
    let half = Q::new(BigInt::one(), BigInt::from(2));
    let mut units = floor.to_integer();
    if remainder > half || (remainder == half && units.is_odd()) {
        units += 1;
    }
    let mut digits = units.to_string();
    if decimals > 0 {
        if digits.len() <= decimals {
            digits = format!("{}{}", "0".repeat(decimals + 1 - digits.len()), digits);
        }
        digits.insert(digits.len() - decimals, '.');
    }
    if value.is_negative() && !units.is_zero() {
        digits.insert(0, '-');
    }
    digits
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_integers_and_decimals() {
        assert_eq!(parse_rational("3/4"), Some(q(3, 4)));
        assert_eq!(parse_rational("-6/8"), Some(q(-3, 4)));
        assert_eq!(parse_rational("7"), Some(qi(7)));
        assert_eq!(parse_rational("-0.125"), Some(q(-1, 8)));
        assert_eq!(parse_rational("+.5"), Some(q(1, 2)));
        assert_eq!(parse_rational("2."), Some(qi(2)));
        assert_eq!(parse_rational("0.1"), Some(q(1, 10)));
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", "1/0", "a", "1.2.3", "-", ".", "1e3", "1/2/3"] {
            assert_eq!(parse_rational(bad), None, "{bad:?}");
        }
    }

    #[test]
    fn half_to_even_rendering() {
        assert_eq!(render_decimal(&q(1, 16), 3), "0.062");
        assert_eq!(render_decimal(&q(5, 16), 3), "0.312");
        assert_eq!(render_decimal(&q(9, 32), 3), "0.281");
        assert_eq!(render_decimal(&q(1, 32), 3), "0.031");
        assert_eq!(render_decimal(&q(7, 32), 3), "0.219");
        assert_eq!(render_decimal(&q(13, 32), 3), "0.406");
        assert_eq!(render_decimal(&q(3, 32), 3), "0.094");
        assert_eq!(render_decimal(&q(1, 2), 3), "0.500");
        assert_eq!(render_decimal(&q(5, 2), 0), "2");
        assert_eq!(render_decimal(&q(7, 2), 0), "4");
        assert_eq!(render_decimal(&q(-3, 2), 1), "-1.5");
        assert_eq!(render_decimal(&q(-1, 2000), 3), "0.000");
        assert_eq!(render_decimal(&qi(12), 2), "12.00");
    }

    #[test]
    fn exact_format() {
        assert_eq!(format_exact(&q(2, 4)), "1/2");
        assert_eq!(format_exact(&qi(-3)), "-3");
        assert_eq!(format_exact(&qi(0)), "0");
    }
}

/// Serde adapter storing a rational as its exact `p/q` string.
pub mod serde_exact {
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    use super::{format_exact, parse_rational, Q};

    pub fn serialize<S: Serializer>(value: &Q, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&format_exact(value))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Q, D::Error> {
        let text = String::deserialize(de)?;
        parse_rational(&text).ok_or_else(|| D::Error::custom(format!("not a rational: `{text}`")))
    }

    pub mod vec {
        use serde::{de::Error as _, ser::SerializeSeq, Deserialize, Deserializer, Serializer};

        use super::super::{format_exact, parse_rational, Q};

        pub fn serialize<S: Serializer>(values: &[Q], ser: S) -> Result<S::Ok, S::Error> {
            let mut seq = ser.serialize_seq(Some(values.len()))?;
            for v in values {
                seq.serialize_element(&format_exact(v))?;
            }
            seq.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Vec<Q>, D::Error> {
            Vec::<String>::deserialize(de)?
                .iter()
                .map(|t| parse_rational(t).ok_or_else(|| D::Error::custom(format!("not a rational: `{t}`"))))
                .collect()
        }
    }
}
