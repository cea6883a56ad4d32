//! Arbitrary-precision rational scalars.
//!
//! `Rat` is the scalar type for everything that is not a cyclotomic
//! integer combination: degree shifting numbers, pairings, structure
//! constants, graded dimensions. Values are always reduced (gcd of
//! numerator and denominator is 1, denominator positive), which `num`
//! guarantees for every value built through `Ratio::new` or arithmetic.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

pub type Rat = BigRational;

/// Rational from a machine integer.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational `num/den`. Panics if `den` is zero.
pub fn rat(num: i64, den: i64) -> Rat {
    assert!(den != 0, "zero denominator");
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Fractional part in `[0, 1)`.
pub fn frac(r: &Rat) -> Rat {
    r - r.floor()
}

/// Parse `"p"` or `"p/q"` with optional leading `-` on `p` and `q > 0`.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = match den {
        Some(d) => {
            if d.starts_with('+') || d.starts_with('-') {
                return None;
            }
            d.parse().ok()?
        }
        None => BigInt::one(),
    };
    if den.is_zero() || den.is_negative() {
        return None;
    }
    Some(Rat::new(num, den))
}

/// Canonical `"p/q"` rendering (`"p"` when the value is an integer).
pub fn rat_string(r: &Rat) -> String {
    r.to_string()
}
