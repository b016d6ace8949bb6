//! Exact rational scalars.
//!
//! Coefficients are arbitrary-precision rationals. `BigRational` already
//! keeps values in lowest terms with a positive denominator, which is exactly
//! the invariant needed here, so we use it directly instead of a hand-rolled
//! fraction type.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::error::Error;
use crate::Result;

pub type Rational = BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `p/q`. Panics on `q == 0`; intended for literals.
pub fn rat(p: i64, q: i64) -> Rational {
    assert!(q != 0, "zero denominator in rational literal");
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parse `"p"` or `"p/q"` with optional sign and surrounding whitespace.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(Error::BadRational(text.to_string()));
    }
    let (num_str, den_str) = match trimmed.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (trimmed, None),
    };
    let numerator: BigInt = num_str
        .parse()
        .map_err(|_| Error::BadRational(text.to_string()))?;
    let denominator: BigInt = match den_str {
        Some(d) => d.parse().map_err(|_| Error::BadRational(text.to_string()))?,
        None => BigInt::one(),
    };
    if denominator.is_zero() {
        return Err(Error::ZeroDenominator(text.to_string()));
    }
    Ok(Rational::new(numerator, denominator))
}

/// Render a rational as `"p"` or `"p/q"`, the inverse of [`parse_rational`].
pub fn format_rational(value: &Rational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Exact integer extraction; `None` when the value is not an integer.
pub fn to_integer(value: &Rational) -> Option<BigInt> {
    if value.denom().is_one() {
        Some(value.numer().clone())
    } else {
        None
    }
}

/// Total order on rationals usable for canonical sorting of coefficients.
pub fn cmp_rational(a: &Rational, b: &Rational) -> std::cmp::Ordering {
    a.cmp(b)
}

/// Sign as -1, 0, 1.
pub fn sign(value: &Rational) -> i32 {
    if value.is_zero() {
        0
    } else if value.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_roundtrip() {
        for text in ["0", "5", "-3", "2/3", "-7/12", "22/11"] {
            let value = parse_rational(text).unwrap();
            let rendered = format_rational(&value);
            assert_eq!(parse_rational(&rendered).unwrap(), value);
        }
        // normalization: 22/11 renders as an integer
        assert_eq!(format_rational(&parse_rational("22/11").unwrap()), "2");
        assert_eq!(format_rational(&parse_rational("-4/6").unwrap()), "-2/3");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_rational("").is_err());
        assert!(parse_rational("a/b").is_err());
        assert!(matches!(
            parse_rational("1/0"),
            Err(Error::ZeroDenominator(_))
        ));
    }
}
