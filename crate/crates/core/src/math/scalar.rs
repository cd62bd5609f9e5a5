//! Exact rational scalars and their textual wire format.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always normalized (lowest terms, positive
/// denominator).
pub type ExactScalar = BigRational;

pub fn int(n: i64) -> ExactScalar {
    BigRational::from_integer(BigInt::from(n))
}

/// `num/den`. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> ExactScalar {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn pow(base: &ExactScalar, exp: usize) -> ExactScalar {
    num_traits::pow(base.clone(), exp)
}

/// Integer power allowing negative exponents. Errors on `0^k` with `k < 0`.
pub fn powi(base: &ExactScalar, exp: i64) -> Result<ExactScalar> {
    if exp >= 0 {
        return Ok(pow(base, exp as usize));
    }
    if base.is_zero() {
        return Err(Error::domain("zero raised to a negative power"));
    }
    Ok(pow(&base.recip(), exp.unsigned_abs() as usize))
}

/// Parse `"num/den"` or an integer shorthand such as `"-3"`.
pub fn parse_scalar(token: &str) -> Result<ExactScalar> {
    let t = token.trim();
    if t.is_empty() {
        return Err(Error::parse("token", "empty rational"));
    }
    BigRational::from_str(t).map_err(|e| Error::parse("token", format!("{t:?}: {e}")))
}

/// Canonical text form: integer shorthand when the denominator is 1.
pub fn format_scalar(x: &ExactScalar) -> String {
    x.to_string()
}

/// Parse a comma-separated list of rationals, reporting the 1-based
/// position of the first bad token.
pub fn parse_scalar_list(text: &str) -> Result<Vec<ExactScalar>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .enumerate()
        .map(|(i, tok)| {
            parse_scalar(tok).map_err(|e| match e {
                Error::Parse { message, .. } => Error::parse(format!("item {}", i + 1), message),
                other => other,
            })
        })
        .collect()
}

/// `0 < p < 1`.
pub fn is_open_probability(p: &ExactScalar) -> bool {
    p.is_positive() && *p < ExactScalar::one()
}
