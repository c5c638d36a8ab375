//! Arbitrary-precision rationals and their textual form (`"p/q"` or `"p"`).

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn parse(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::InvalidRational(s.to_string());
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

pub fn format(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn floor_i128(r: &Rational) -> Option<i128> {
    r.floor().to_integer().to_i128()
}

pub fn ceil_i128(r: &Rational) -> Option<i128> {
    r.ceil().to_integer().to_i128()
}

/// Least common multiple of the denominators.
pub fn denominator_lcm<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// Bit size used to rank pivot candidates: smaller is preferred.
pub(crate) fn height(r: &Rational) -> u64 {
    r.numer().abs().bits() + r.denom().bits()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse("3").unwrap(), int(3));
        assert_eq!(parse("-2/4").unwrap(), frac(-1, 2));
        assert_eq!(parse(" 7 / 21 ").unwrap(), frac(1, 3));
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
    }

    #[test]
    fn format_reduced() {
        assert_eq!(format(&frac(6, 4)), "3/2");
        assert_eq!(format(&frac(-4, 2)), "-2");
        assert_eq!(format(&int(0)), "0");
    }

    #[test]
    fn lcm_of_denominators() {
        let v = [frac(1, 4), frac(5, 6), int(2)];
        assert_eq!(denominator_lcm(&v), BigInt::from(12));
    }
}
