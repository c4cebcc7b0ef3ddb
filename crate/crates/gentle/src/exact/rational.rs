//! Arbitrary-precision rationals.
//!
//! `Rational` is `num_rational::BigRational`: always reduced, positive
//! denominator, zero stored as 0/1. Everything downstream (polynomials,
//! matrices, homological solves) is built on it; no floating point anywhere.

use crate::error::{Error, Result};
use num_bigint::BigInt;
pub use num_rational::BigRational as Rational;
use num_traits::{One, Signed, Zero};

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `p`, `-p`, or `p/q` with a positive result denominator.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = |detail: &str| Error::Flag {
        flag: s.to_string(),
        detail: detail.to_string(),
    };
    let s = s.trim();
    match s.split_once('/') {
        None => {
            let n: BigInt = s.parse().map_err(|_| bad("not an integer"))?;
            Ok(Rational::from_integer(n))
        }
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad("bad numerator"))?;
            let d: BigInt = d.trim().parse().map_err(|_| bad("bad denominator"))?;
            if d.is_zero() {
                return Err(bad("zero denominator"));
            }
            Ok(Rational::new(n, d))
        }
    }
}

/// Canonical display: integer when the denominator is 1, else `p/q`.
pub fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn is_negative(r: &Rational) -> bool {
    r.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_is_canonical() {
        // 2/4 and 1/2 are the same value with the same representation
        let a = ratio(2, 4);
        let b = ratio(1, 2);
        assert_eq!(a, b);
        assert_eq!(a.numer(), b.numer());
        assert_eq!(a.denom(), b.denom());
        // negative denominators normalize away
        let c = ratio(1, -2);
        assert_eq!(c, ratio(-1, 2));
        assert!(c.denom() > &num_bigint::BigInt::from(0));
    }

    #[test]
    fn field_axioms_spot_check() {
        let xs = [ratio(1, 2), ratio(-3, 7), rat(4), ratio(5, 3)];
        for a in &xs {
            for b in &xs {
                for c in &xs {
                    assert_eq!((a + b) + c, a + (b + c));
                    assert_eq!(a * b, b * a);
                    assert_eq!(a * (b + c), a * b + a * c);
                }
            }
        }
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("7/3").unwrap(), ratio(7, 3));
        assert_eq!(parse_rational("-2").unwrap(), rat(-2));
        assert_eq!(parse_rational("4/6").unwrap(), ratio(2, 3));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(fmt_rational(&ratio(7, 3)), "7/3");
        assert_eq!(fmt_rational(&rat(-5)), "-5");
    }
}
