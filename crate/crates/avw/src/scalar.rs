//! Exact rational scalars, the ground field for everything in this crate.
//!
//! All verification runs over arbitrary-precision rationals: polynomial
//! identities with rational structure constants are decidable exactly, so no
//! floating point appears anywhere in the computational core. Values are kept
//! in reduced form (gcd(|num|, den) = 1, den > 0) by `BigRational` itself,
//! which makes equality testing syntactic.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type ExactScalar = BigRational;

/// Integer as a scalar.
pub fn int(n: i64) -> ExactScalar {
    BigRational::from_integer(BigInt::from(n))
}

/// Reduced fraction n/d.
pub fn frac(n: i64, d: i64) -> ExactScalar {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Parse a decimal-free rational literal: `"p"` or `"p/q"`.
pub fn parse_ratio(s: &str) -> Result<ExactScalar> {
    let s = s.trim();
    let bad = || Error::BadRational(s.to_string());
    match s.split_once('/') {
        Some((num, den)) => {
            let num: BigInt = num.trim().parse().map_err(|_| bad())?;
            let den: BigInt = den.trim().parse().map_err(|_| bad())?;
            if den.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(num, den))
        }
        None => {
            let num: BigInt = s.parse().map_err(|_| bad())?;
            Ok(BigRational::from_integer(num))
        }
    }
}

/// Render as `"p"` or `"p/q"`; inverse of [`parse_ratio`].
pub fn format_ratio(x: &ExactScalar) -> String {
    x.to_string()
}

/// Decimal approximation for human-readable output only.
pub fn approx(x: &ExactScalar) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Exact square root if `x` is the square of a rational, else `None`.
pub fn sqrt_exact(x: &ExactScalar) -> Option<ExactScalar> {
    if x.is_negative() {
        return None;
    }
    if x.is_zero() {
        return Some(ExactScalar::zero());
    }
    let num = x.numer().sqrt();
    let den = x.denom().sqrt();
    if &(&num * &num) == x.numer() && &(&den * &den) == x.denom() {
        Some(BigRational::new(num, den))
    } else {
        None
    }
}
