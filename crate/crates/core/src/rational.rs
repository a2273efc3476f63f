//! Exact rational numbers and their text forms.
//!
//! [`Rational`] is `num_rational::BigRational`, which keeps every value
//! reduced with a positive denominator. The helpers here add the strict
//! text syntax used by the tiling file format and fixed-precision decimal
//! output for human-facing tables and figures.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::BigRational;

/// `num / den` reduced. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Formats as `p/q` in lowest terms, or a bare integer when `q == 1`.
pub fn format(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `<int>` or `<int>/<posint>`. Unreduced fractions, zero or signed
/// denominators and stray whitespace are rejected.
pub fn parse_strict(text: &str) -> Result<Rational, String> {
    let (num_text, den_text) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let numer = parse_int(num_text)?;
    let Some(den_text) = den_text else {
        return Ok(Rational::from_integer(numer));
    };
    if !den_text.bytes().all(|b| b.is_ascii_digit()) || den_text.is_empty() {
        return Err(format!(
            "denominator `{den_text}` is not a positive integer"
        ));
    }
    let denom: BigInt = den_text
        .parse()
        .map_err(|_| format!("bad denominator `{den_text}`"))?;
    if denom.is_zero() {
        return Err("zero denominator".into());
    }
    if !numer.gcd(&denom).is_one() {
        return Err(format!("fraction `{text}` is not in lowest terms"));
    }
    if denom.is_one() {
        return Err(format!(
            "fraction `{text}` has unit denominator; write `{numer}`"
        ));
    }
    Ok(Rational::new_raw(numer, denom))
}

fn parse_int(text: &str) -> Result<BigInt, String> {
    let digits = text.strip_prefix('-').unwrap_or(text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("`{text}` is not an integer"));
    }
    text.parse()
        .map_err(|_| format!("`{text}` is not an integer"))
}

/// Decimal expansion with exactly `places` fractional digits, rounding half
/// to even.
pub fn to_decimal(r: &Rational, places: u32) -> String {
    let scale = BigInt::from(10u32).pow(places);
    let scaled = r * Rational::from_integer(scale.clone());
    let negative = scaled.is_negative();
    let magnitude = scaled.abs();
    let (whole, frac) = magnitude.numer().div_rem(magnitude.denom());
    let twice: BigInt = &frac * 2u32;
    let rounded = match twice.cmp(magnitude.denom()) {
        std::cmp::Ordering::Less => whole,
        std::cmp::Ordering::Greater => whole + 1,
        std::cmp::Ordering::Equal if whole.is_even() => whole,
        std::cmp::Ordering::Equal => whole + 1,
    };
    let (int_part, frac_part) = rounded.div_rem(&scale);
    let sign = if negative && !rounded.is_zero() {
        "-"
    } else {
        ""
    };
    if places == 0 {
        return format!("{sign}{int_part}");
    }
    format!(
        "{sign}{int_part}.{frac_part:0>width$}",
        width = places as usize
    )
}
