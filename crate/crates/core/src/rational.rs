//! Reduced fractions for Noether-line slack and inequality-chain audits.
//!
//! Invariant: denominator positive, numerator and denominator coprime, zero
//! is `0/1`. Values at this boundary are desk-scale (denominators are 1 or 3
//! in practice); arithmetic runs through i128 intermediates and panics on
//! the (unreachable in practice) overflow instead of wrapping.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use serde::Serialize;

use crate::error::Error;

/// An exact rational number in lowest terms.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct Fraction {
    num: i64,
    den: i64,
}

impl Fraction {
    /// `num / den`, reduced. Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        Fraction::normalize(num as i128, den as i128)
    }

    fn normalize(num: i128, den: i128) -> Self {
        assert!(den != 0, "fraction with zero denominator");
        let sign = if den < 0 { -1 } else { 1 };
        let g = num.gcd(&den);
        let g = if g == 0 { 1 } else { g };
        let num = sign * num / g;
        let den = sign * den / g;
        Fraction {
            num: i64::try_from(num).expect("fraction numerator out of range"),
            den: i64::try_from(den).expect("fraction denominator out of range"),
        }
    }

    pub fn zero() -> Self {
        Fraction { num: 0, den: 1 }
    }

    pub fn numerator(&self) -> i64 {
        self.num
    }

    pub fn denominator(&self) -> i64 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn is_negative(&self) -> bool {
        self.num < 0
    }

    pub fn is_positive(&self) -> bool {
        self.num > 0
    }
}

impl From<i64> for Fraction {
    fn from(n: i64) -> Self {
        Fraction { num: n, den: 1 }
    }
}

impl Add for Fraction {
    type Output = Fraction;
    fn add(self, rhs: Fraction) -> Fraction {
        Fraction::normalize(
            self.num as i128 * rhs.den as i128 + rhs.num as i128 * self.den as i128,
            self.den as i128 * rhs.den as i128,
        )
    }
}

impl Sub for Fraction {
    type Output = Fraction;
    fn sub(self, rhs: Fraction) -> Fraction {
        self + (-rhs)
    }
}

impl Neg for Fraction {
    type Output = Fraction;
    fn neg(self) -> Fraction {
        Fraction {
            num: -self.num,
            den: self.den,
        }
    }
}

impl PartialOrd for Fraction {
    fn partial_cmp(&self, other: &Fraction) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Fraction {
    fn cmp(&self, other: &Fraction) -> Ordering {
        // Denominators are positive, so cross-multiplication preserves order.
        (self.num as i128 * other.den as i128).cmp(&(other.num as i128 * self.den as i128))
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl FromStr for Fraction {
    type Err = Error;

    /// Accepts `n` or `n/d` with optional sign on either part.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let parse_int = |t: &str| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad integer `{}` in fraction", t.trim())))
        };
        match s.split_once('/') {
            None => Ok(Fraction::from(parse_int(s)?)),
            Some((n, d)) => {
                let den = parse_int(d)?;
                if den == 0 {
                    return Err(Error::Parse("fraction with zero denominator".to_string()));
                }
                Ok(Fraction::new(parse_int(n)?, den))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_and_fixes_sign() {
        assert_eq!(Fraction::new(4, 6), Fraction::new(2, 3));
        assert_eq!(Fraction::new(1, -3), Fraction::new(-1, 3));
        assert_eq!(Fraction::new(0, -7), Fraction::zero());
        assert_eq!(Fraction::new(-2, -4).to_string(), "1/2");
    }

    #[test]
    fn arithmetic_is_exact() {
        let third = Fraction::new(1, 3);
        assert_eq!(third + third + third, Fraction::from(1));
        assert_eq!(
            Fraction::from(2) - Fraction::new(16, 3) + Fraction::new(10, 3),
            Fraction::zero()
        );
        assert!(Fraction::new(1, 3) < Fraction::new(1, 2));
        assert!((Fraction::from(5) - Fraction::new(14, 3)).is_positive());
    }

    #[test]
    fn renders_integers_without_denominator() {
        assert_eq!(Fraction::from(-4).to_string(), "-4");
        assert_eq!(Fraction::new(-5, 3).to_string(), "-5/3");
    }

    #[test]
    fn parses_both_forms() {
        assert_eq!("7".parse::<Fraction>().unwrap(), Fraction::from(7));
        assert_eq!("-5/3".parse::<Fraction>().unwrap(), Fraction::new(-5, 3));
        assert_eq!(" 4 / 6 ".parse::<Fraction>().unwrap(), Fraction::new(2, 3));
        assert!("1/0".parse::<Fraction>().is_err());
        assert!("x".parse::<Fraction>().is_err());
    }

    #[test]
    fn serializes_as_num_den_object() {
        let json = serde_json::to_string(&Fraction::new(-5, 3)).unwrap();
        assert_eq!(json, r#"{"num":-5,"den":3}"#);
    }
}
