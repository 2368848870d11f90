//! Exact rational scalars.
//!
//! Every scalar in the crate is a [`Rational`]: an arbitrary-precision
//! fraction kept in canonical form (positive denominator, reduced) by
//! `num-rational`. No operation ever rounds.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Arbitrary-precision rational number in canonical form.
pub type Rational = num_rational::BigRational;

/// `n / d` as a [`Rational`]. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a [`Rational`].
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `base^exp` for a signed exponent. `base` must be nonzero when `exp < 0`.
pub fn rat_pow(base: &Rational, exp: i64) -> Rational {
    if exp == 0 {
        return Rational::from_integer(BigInt::from(1));
    }
    let mag = exp.unsigned_abs() as u32;
    let num = base.numer().pow(mag);
    let den = base.denom().pow(mag);
    if exp > 0 {
        Rational::new(num, den)
    } else {
        debug_assert!(!base.is_zero(), "negative power of zero");
        Rational::new(den, num)
    }
}

/// Parse `"a/b"` or a bare integer `"a"` into a [`Rational`].
///
/// Rejects zero denominators and empty components; never accepts decimals,
/// so exactness cannot be lost at the boundary.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num_str.parse().map_err(|_| Error::InvalidRational)?;
    let den: BigInt = den_str.parse().map_err(|_| Error::InvalidRational)?;
    if den.is_zero() {
        return Err(Error::InvalidRational);
    }
    Ok(Rational::new(num, den))
}
