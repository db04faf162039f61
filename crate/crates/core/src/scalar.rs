//! Scalar abstraction shared by every numeric routine in the crate.
//!
//! Two scalar kinds are supported: exact arbitrary-precision rationals
//! ([`Rational`]) and IEEE floats (`f64`, `f32`). Exact scalars make
//! polynomial arithmetic and matrix construction error-free, which matters
//! because the fast Bézout recurrence is not high-relative-accuracy in
//! floating point. The kind is chosen once, through the type parameter.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive, Zero};

/// Exact arbitrary-precision rational scalar.
pub type Rational = BigRational;

/// Field scalar usable throughout the crate.
///
/// Everything is expressed through `num-traits` bounds so the same code runs
/// on `f64`, `f32` and [`Rational`].
pub trait Scalar:
    Num
    + Signed
    + FromPrimitive
    + ToPrimitive
    + Clone
    + PartialOrd
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
    /// True when arithmetic in this type is error-free.
    const EXACT: bool;

    /// Parses a decimal literal (`"8.50665"`, `"-3e-2"`) or an integer
    /// fraction (`"1/7"`). Exact scalars parse decimals without rounding,
    /// e.g. `"8.50665"` becomes `850665/100000`. Returns `None` for
    /// malformed or non-finite input.
    fn parse_decimal(text: &str) -> Option<Self>;

    fn from_int(value: i64) -> Self {
        Self::from_i64(value).expect("integer out of range for scalar type")
    }

    /// The ratio `numer/denom` of two machine integers; `denom` must be
    /// nonzero.
    fn from_ratio(numer: i64, denom: i64) -> Self {
        Self::from_int(numer) / Self::from_int(denom)
    }

    /// Conversion for combinatorial counts (binomial coefficients).
    fn from_count(value: u128) -> Self {
        Self::from_u128(value).expect("count out of range for scalar type")
    }

    /// Nearest-float view of the scalar, used when handing exact data to
    /// floating-point linear algebra.
    fn to_f64_lossy(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn parse_decimal(text: &str) -> Option<Self> {
        parse_rational_literal(text)
            .as_ref()
            .and_then(Rational::to_f64)
            .filter(|v| v.is_finite())
    }
}

impl Scalar for f32 {
    const EXACT: bool = false;

    fn parse_decimal(text: &str) -> Option<Self> {
        parse_rational_literal(text)
            .as_ref()
            .and_then(Rational::to_f32)
            .filter(|v| v.is_finite())
    }
}

impl Scalar for Rational {
    const EXACT: bool = true;

    fn parse_decimal(text: &str) -> Option<Self> {
        parse_rational_literal(text)
    }
}

/// Parses a decimal or fraction literal into an exact rational.
///
/// Accepted forms: `12`, `-0.25`, `.5`, `8.50665`, `1e-3`, `2.5E+2` and
/// integer fractions such as `1/7` or `-3/4`.
pub fn parse_rational_literal(text: &str) -> Option<Rational> {
    let text = text.trim();
    if text.is_empty() {
        return None;
    }
    if let Some((numer, denom)) = text.split_once('/') {
        let numer: BigInt = numer.trim().parse().ok()?;
        let denom: BigInt = denom.trim().parse().ok()?;
        if denom.is_zero() {
            return None;
        }
        return Some(Rational::new(numer, denom));
    }
    let (mantissa, exponent) = match text.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i64>().ok()?),
        None => (text, 0),
    };
    let (int_part, frac_part) = match mantissa.split_once('.') {
        Some((i, f)) => (i, f),
        None => (mantissa, ""),
    };
    if frac_part.contains(['+', '-']) {
        return None;
    }
    let digits = format!("{int_part}{frac_part}");
    if digits.is_empty() || digits == "+" || digits == "-" {
        return None;
    }
    let unscaled: BigInt = digits.parse().ok()?;
    let shift = exponent.checked_sub(frac_part.len() as i64)?;
    if shift.unsigned_abs() > 100_000 {
        return None;
    }
    let scale = BigInt::from(10).pow(shift.unsigned_abs() as u32);
    Some(if shift >= 0 {
        Rational::from(unscaled * scale)
    } else {
        Rational::new(unscaled, scale)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn parses_decimal_strings_exactly() {
        assert_eq!(parse_rational_literal("8.50665"), Some(rat(850665, 100000)));
        assert_eq!(parse_rational_literal("-3.0395517"), Some(rat(-30395517, 10000000)));
        assert_eq!(parse_rational_literal("14.3420"), Some(rat(143420, 10000)));
        assert_eq!(parse_rational_literal("12"), Some(rat(12, 1)));
        assert_eq!(parse_rational_literal(".5"), Some(rat(1, 2)));
        assert_eq!(parse_rational_literal("-.5"), Some(rat(-1, 2)));
        assert_eq!(parse_rational_literal("2.5e2"), Some(rat(250, 1)));
        assert_eq!(parse_rational_literal("25e-1"), Some(rat(5, 2)));
    }

    #[test]
    fn parses_fractions() {
        assert_eq!(parse_rational_literal("1/7"), Some(rat(1, 7)));
        assert_eq!(parse_rational_literal(" -3 / 4 "), Some(rat(-3, 4)));
        assert_eq!(parse_rational_literal("1/0"), None);
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", "abc", "1.2.3", "--4", "1e", "4+2", "1.-5", "."] {
            assert_eq!(parse_rational_literal(bad), None, "input {bad:?}");
        }
    }

    #[test]
    fn float_parse_is_correctly_rounded() {
        assert_eq!(f64::parse_decimal("1/7"), Some(1.0 / 7.0));
        assert_eq!(f64::parse_decimal("8.50665"), Some(8.50665));
        assert_eq!(f64::parse_decimal("nonsense"), None);
    }

    #[test]
    fn ratio_construction() {
        assert_eq!(Rational::from_ratio(3, 4), rat(3, 4));
        assert_eq!(f64::from_ratio(3, 4), 0.75);
        assert_eq!(Rational::from_count(1u128 << 90).to_f64_lossy(), (1u128 << 90) as f64);
    }
}
