//! Exact rationals.
//!
//! Scalars are `num_rational::BigRational`, which is always kept in lowest
//! terms with a positive denominator. This module adds the constructors,
//! parsing and text forms used across the crate.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ArithError;

pub type Rational = BigRational;

/// `num / den` in lowest terms. Panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    assert!(den != 0, "zero denominator");
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn half() -> Rational {
    rat(1, 2)
}

/// Parses `"int"` or `"int/int"`. Whitespace around the parts is ignored.
pub fn parse_rational(text: &str) -> Result<Rational, ArithError> {
    let bad = || ArithError::BadRational(text.to_string());
    let trimmed = text.trim();
    let (num, den) = match trimmed.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (trimmed, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

/// Text form `"num/den"`, or `"num"` for integers.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

/// True when `2r` is an odd integer.
pub fn is_half_odd(r: &Rational) -> bool {
    let twice = r * int(2);
    is_integer(&twice) && twice.numer().is_odd()
}

/// Integer value, if `r` is an integer that fits in `i64`.
pub fn to_i64(r: &Rational) -> Option<i64> {
    if !is_integer(r) {
        return None;
    }
    i64::try_from(r.numer().clone()).ok()
}

pub fn abs(r: &Rational) -> Rational {
    r.abs()
}

/// Sorted, de-duplicated set `{ n/d : |n| <= max_num, 1 <= d <= max_den }`.
pub fn rational_grid(max_num: u32, max_den: u32) -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::new();
    for d in 1..=i64::from(max_den) {
        for n in -i64::from(max_num)..=i64::from(max_num) {
            out.push(rat(n, d));
        }
    }
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_and_sign() {
        let r = rat(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert_eq!(format_rational(&r), "-3/2");
        assert_eq!(format_rational(&int(7)), "7");
    }

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("1/2").unwrap(), half());
        assert_eq!(parse_rational("-4/6").unwrap(), rat(-2, 3));
        assert_eq!(parse_rational(" 5 ").unwrap(), int(5));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("0.5").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn half_integers() {
        assert!(is_half_odd(&rat(-3, 2)));
        assert!(!is_half_odd(&int(1)));
        assert!(!is_half_odd(&rat(1, 3)));
    }

    #[test]
    fn grid_is_sorted_and_unique() {
        let g = rational_grid(4, 4);
        assert_eq!(g.len(), 23);
        assert!(g.windows(2).all(|w| w[0] < w[1]));
        assert!(g.contains(&rat(3, 2)) && g.contains(&rat(-4, 3)));
        assert_eq!(rational_grid(1, 1), vec![int(-1), int(0), int(1)]);
    }
}
